#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "dspace/linalg.hpp"

namespace dspace {

inline constexpr std::size_t kMaxHullDimension = 4;

struct HullVolumeResult {
    /// Lebesgue measure in the given coordinates; 0 unless full-dimensional.
    Rational volume;
    /// Affine dimension of the point set.
    std::size_t dim = 0;
};

class UnsupportedDimension : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact volume of the convex hull of `points` (ambient dimension <= 4).
///
/// Builds a simplicial boundary by incremental beneath-beyond insertion with
/// exact orientation tests. A facet counts as visible only when the new
/// point is strictly beyond its hyperplane, so coplanar points never create
/// degenerate facets. The volume is the sum of the cones from the vertex
/// centroid over the boundary simplices.
HullVolumeResult hull_volume(std::span<const RationalVector> points);

}  // namespace dspace
