#include "dspace/random.hpp"

#include <algorithm>

namespace dspace {

long Sampler::integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Rational Sampler::rational(long bound, long max_den) {
    const long q = integer(1, max_den);
    return Rational(integer(-bound * q, bound * q), q);
}

Rational Sampler::nonzero_rational(long bound, long max_den) {
    for (;;) {
        Rational r = rational(bound, max_den);
        if (!r.is_zero()) return r;
    }
}

QMatrix Sampler::matrix(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rational();
    return m;
}

QMatrix Sampler::matrix_with_nonzero_minors(std::size_t n) {
    for (;;) {
        QMatrix m = matrix(n);
        if (all_principal_minors_nonzero(m).all_nonzero) return m;
    }
}

QMatrix Sampler::matrix_with_vanishing_minor(std::size_t n) {
    QMatrix m = matrix(n);
    const std::vector<Subset> subsets = nonempty_subsets(n);
    const Subset& s = subsets[static_cast<std::size_t>(integer(0, static_cast<long>(subsets.size()) - 1))];
    // Replace the last row of the block by a combination of the others.
    const std::size_t last = s.back();
    for (std::size_t c : s) m(last, c) = Rational(0);
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        const Rational w = rational();
        for (std::size_t c : s) m(last, c) += w * m(s[k], c);
    }
    if (!principal_minor(m, s).is_zero()) throw InvariantViolation("constructed minor does not vanish");
    return m;
}

MPoly Sampler::polynomial(std::size_t nvars, unsigned max_degree, std::size_t terms) {
    MPoly p(nvars);
    for (std::size_t t = 0; t < terms; ++t) {
        Monomial m(nvars);
        const long degree = integer(0, max_degree);
        for (long k = 0; k < degree; ++k) ++m[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))];
        p.add_term(m, nonzero_rational());
    }
    return p;
}

}  // namespace dspace
