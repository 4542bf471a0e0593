#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "dspace/linalg.hpp"
#include "dspace/mpoly.hpp"

namespace dspace {

/// Seeded generator whose draws are reproducible across platforms: every
/// draw reduces the raw 64-bit output modulo the range instead of going
/// through the implementation-defined std distributions.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long integer(long lo, long hi);
    bool coin() { return integer(0, 1) == 1; }

    /// p/q with q in [1, max_den] and p/q in [-bound, bound].
    Rational rational(long bound = 5, long max_den = 4);
    Rational nonzero_rational(long bound = 5, long max_den = 4);

    QMatrix matrix(std::size_t n);
    /// Rejection-samples until every principal minor is nonzero.
    QMatrix matrix_with_nonzero_minors(std::size_t n);
    /// A random matrix whose principal minor on a random subset is forced to 0.
    QMatrix matrix_with_vanishing_minor(std::size_t n);

    /// Up to `terms` random terms of degree at most max_degree.
    MPoly polynomial(std::size_t nvars, unsigned max_degree, std::size_t terms);

private:
    std::mt19937_64 engine_;
};

}  // namespace dspace
