#include "dspace/volumes.hpp"

#include <algorithm>

#include "dspace/diffops.hpp"
#include "dspace/echelon.hpp"
#include "dspace/gradedspace.hpp"

namespace dspace {

std::string to_string(Normalization n) { return n == Normalization::WeightLattice ? "weight" : "root"; }

Normalization parse_normalization(std::string_view text) {
    if (text == "weight") return Normalization::WeightLattice;
    if (text == "root") return Normalization::RootLattice;
    throw std::invalid_argument("normalization must be 'weight' or 'root'");
}

Rational permutohedron_volume(const CartanSystem& sys, const WeightVector& lambda, std::size_t orbit_cap) {
    const OrbitSet orbit = weyl_orbit(sys, lambda, orbit_cap);
    return hull_volume(orbit.points).volume;
}

namespace {

RationalVector monomial_values(const std::vector<Monomial>& monomials, const WeightVector& point) {
    RationalVector row;
    row.reserve(monomials.size());
    for (const Monomial& m : monomials) row.push_back(evaluate(MPoly::term(m, Rational(1)), point));
    return row;
}

// Off-grid probes: coordinate j of probe k is values[(k + j) % 5].
std::vector<WeightVector> validation_points(std::size_t n) {
    const Rational values[] = {Rational(1, 2), Rational(3), Rational(7, 2), Rational(5), Rational(5, 2)};
    std::vector<WeightVector> points;
    for (std::size_t k = 0; k < 5; ++k) {
        WeightVector p(n);
        for (std::size_t j = 0; j < n; ++j) p[j] = values[(k + j) % 5];
        points.push_back(std::move(p));
    }
    return points;
}

}  // namespace

MPoly volume_polynomial(const CartanSystem& sys) {
    const std::size_t n = sys.rank();
    if (n > kMaxHullDimension) {
        throw UnsupportedDimension("volume polynomials are supported up to rank " + std::to_string(kMaxHullDimension));
    }
    const std::vector<Monomial> monomials = monomials_of_degree(n, static_cast<unsigned>(n));

    // Walk {1..n+1}^n lexicographically, keeping points that raise the rank.
    RowEchelon echelon(monomials.size());
    std::vector<RationalVector> rows;
    RationalVector volumes;
    WeightVector point(n, Rational(1));
    std::vector<long> digits(n, 1);
    for (bool done = false; !done && echelon.rank() < monomials.size();) {
        for (std::size_t j = 0; j < n; ++j) point[j] = Rational(digits[j]);
        RationalVector row = monomial_values(monomials, point);
        std::vector<std::pair<std::size_t, Rational>> entries;
        for (std::size_t k = 0; k < row.size(); ++k) entries.emplace_back(k, row[k]);
        if (echelon.insert(integer_row(entries))) {
            rows.push_back(std::move(row));
            volumes.push_back(permutohedron_volume(sys, point));
        }
        std::size_t j = n;
        while (j > 0 && digits[j - 1] == static_cast<long>(n) + 1) digits[--j] = 1;
        if (j == 0) {
            done = true;
        } else {
            ++digits[j - 1];
        }
    }
    if (echelon.rank() < monomials.size()) {
        throw InvariantViolation("volume interpolation grid is rank deficient");
    }

    const RationalVector coefficients = solve(QMatrix::from_rows(rows), volumes);
    MPoly v(n);
    for (std::size_t k = 0; k < monomials.size(); ++k) v.add_term(monomials[k], coefficients[k]);

    for (const WeightVector& probe : validation_points(n)) {
        if (evaluate(v, probe) != permutohedron_volume(sys, probe)) {
            throw InvariantViolation("interpolated volume polynomial disagrees with the hull volume off the grid");
        }
    }
    if (!in_derivative_space(OperatorContext(sys.root_matrix()), v).verdict) {
        throw InvariantViolation("volume polynomial fails the derivative criterion");
    }
    return v;
}

MPoly face_volume_polynomial(const CartanSystem& sys, const Subset& subset) {
    const std::size_t n = sys.rank();
    MPoly v = MPoly::constant(n, Rational(1));
    for (const Subset& component : dynkin_components(sys, subset)) {
        v = v * embed(volume_polynomial(sys.subsystem(component)), n, component);
    }
    return v;
}

Rational lattice_ratio(const CartanSystem& sys, const Subset& subset) {
    Rational ratio(1);
    for (const Subset& component : dynkin_components(sys, subset)) {
        ratio *= principal_minor(sys.cartan(), component);
    }
    return ratio;
}

MPoly renormalize(const MPoly& v, const CartanSystem& sys, const Subset& subset, Normalization from,
                  Normalization to) {
    if (from == to) return v;
    const Rational ratio = lattice_ratio(sys, subset);
    return from == Normalization::WeightLattice ? scale(v, Rational(1) / ratio) : scale(v, ratio);
}

const MPoly& VolumeBasis::at(const Subset& subset) const {
    const auto it = entries.find(subset);
    if (it == entries.end()) throw std::out_of_range("no volume polynomial for the requested subset");
    return it->second;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void check_basis(const VolumeBasis& basis) {
    const CartanSystem& sys = basis.sys;
    const std::size_t n = sys.rank();
    const OperatorContext ctx(sys.root_matrix());
    const auto fail = [](const std::string& what) { throw InvariantViolation("volume basis: " + what); };

    if (basis.entries.size() != (std::size_t{1} << n)) fail("wrong number of entries");
    if (basis.at({}) != MPoly::constant(n, Rational(1))) fail("V_empty is not 1");

    std::vector<Subset> all{{}};
    for (const Subset& s : nonempty_subsets(n)) all.push_back(s);

    for (const auto& [subset, v] : basis.entries) {
        if (!v.is_homogeneous() || v.degree() != static_cast<unsigned>(subset.size())) fail("wrong degree");
        for (const auto& [m, c] : v.terms()) {
            for (std::size_t j : m.support()) {
                if (!std::binary_search(subset.begin(), subset.end(), j)) fail("variable outside its subset");
            }
        }
        for (const Subset& other : all) {
            Monomial beta(n);
            for (std::size_t j : other) beta[j] = 1;
            const Rational c = v.coefficient(beta);
            if (other == subset ? c.sign() <= 0 : !c.is_zero()) fail("squarefree coefficient pattern");
        }
        if (!in_derivative_space(ctx, v).verdict) fail("entry outside D(C)");
    }

    const GradedBasis graded(sys.root_matrix(), static_cast<unsigned>(n));
    for (unsigned d = 0; d <= n; ++d) {
        if (graded.piece(d).elements.size() != binomial(n, d)) fail("dim D(C)_d is not C(n,d)");
        RowEchelon echelon(graded.total_dim());
        for (const auto& [subset, v] : basis.entries) {
            if (subset.size() != d) continue;
            const auto coords = graded.coordinates(v);
            if (!coords) fail("entry not in the span of the graded basis");
            std::vector<std::pair<std::size_t, Rational>> entries;
            for (std::size_t k = 0; k < coords->size(); ++k) entries.emplace_back(k, (*coords)[k]);
            echelon.insert(integer_row(entries));
        }
        if (echelon.rank() != binomial(n, d)) fail("degree piece is not spanned");
    }
}

}  // namespace

VolumeBasis volume_basis(const CartanSystem& sys, Normalization normalization) {
    const std::size_t n = sys.rank();
    VolumeBasis basis{sys, Normalization::WeightLattice, {}};
    std::map<Subset, MPoly> component_cache;
    basis.entries.emplace(Subset{}, MPoly::constant(n, Rational(1)));
    for (const Subset& subset : nonempty_subsets(n)) {
        MPoly v = MPoly::constant(n, Rational(1));
        for (const Subset& component : dynkin_components(sys, subset)) {
            auto it = component_cache.find(component);
            if (it == component_cache.end()) {
                it = component_cache
                         .emplace(component, embed(volume_polynomial(sys.subsystem(component)), n, component))
                         .first;
            }
            v = v * it->second;
        }
        basis.entries.emplace(subset, std::move(v));
    }
    check_basis(basis);
    return renormalize(basis, normalization);
}

VolumeBasis renormalize(const VolumeBasis& basis, Normalization target) {
    VolumeBasis out{basis.sys, target, {}};
    for (const auto& [subset, v] : basis.entries) {
        out.entries.emplace(subset, renormalize(v, basis.sys, subset, basis.normalization, target));
    }
    return out;
}

std::vector<DerivativeIdentityRow> derivative_identity(const VolumeBasis& basis, RootConvention convention) {
    const std::size_t n = basis.sys.rank();
    const CartanSystem roots = basis.sys.with_convention(convention);
    Subset all(n);
    for (std::size_t j = 0; j < n; ++j) all[j] = j;
    const MPoly& v = basis.at(all);

    std::vector<DerivativeIdentityRow> rows;
    for (std::size_t i = 0; i < n; ++i) {
        DerivativeIdentityRow row;
        row.index = i;
        const WeightVector alpha = roots.simple_root(i);
        const MPoly derivative = directional(v, alpha);
        row.free_of_variable = is_free_of(derivative, i);
        Subset face;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) face.push_back(j);
        }
        const MPoly& f = basis.at(face);
        const auto& [lead, lead_coef] = *f.terms().begin();
        const Rational ratio = derivative.coefficient(lead) / lead_coef;
        if (derivative == scale(f, ratio)) row.ratio = ratio;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace dspace
