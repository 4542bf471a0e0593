#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dspace/hull.hpp"
#include "dspace/mpoly.hpp"
#include "dspace/rootsys.hpp"

namespace dspace {

/// Which lattice has covolume one. Weight-lattice volumes are plain
/// Lebesgue measure in fundamental-weight coordinates; root-lattice volumes
/// are smaller by det(C) per irreducible factor.
enum class Normalization { WeightLattice, RootLattice };

std::string to_string(Normalization n);
Normalization parse_normalization(std::string_view text);

/// Volume of the convex hull of the Weyl orbit of lambda, in weight
/// coordinates. Zero when the hull is lower-dimensional.
Rational permutohedron_volume(const CartanSystem& sys, const WeightVector& lambda,
                              std::size_t orbit_cap = kDefaultOrbitCap);

/// Homogeneous degree-n polynomial agreeing with permutohedron_volume on
/// strictly dominant weights, found by exact interpolation on the grid
/// {1..n+1}^n and then checked on off-grid points and against the
/// derivative criterion for the root matrix. Rank <= 4.
MPoly volume_polynomial(const CartanSystem& sys);

/// Product over the Dynkin components of `subset` of each component's own
/// volume polynomial, embedded at the component's indices. The empty
/// subset gives 1.
MPoly face_volume_polynomial(const CartanSystem& sys, const Subset& subset);

/// prod over components of det(C_component): weight volume / root volume.
Rational lattice_ratio(const CartanSystem& sys, const Subset& subset);

MPoly renormalize(const MPoly& v, const CartanSystem& sys, const Subset& subset, Normalization from,
                  Normalization to);

struct VolumeBasis {
    CartanSystem sys;
    Normalization normalization = Normalization::WeightLattice;
    std::map<Subset, MPoly, SubsetLess> entries;

    const MPoly& at(const Subset& subset) const;
};

/// All 2^n face volume polynomials. Throws InvariantViolation unless
/// every structural property holds: degrees, supports, the squarefree
/// coefficient pattern, membership in D(C), and full rank inside each
/// graded piece of D(C).
VolumeBasis volume_basis(const CartanSystem& sys, Normalization normalization = Normalization::WeightLattice);

VolumeBasis renormalize(const VolumeBasis& basis, Normalization target);

/// One row of the check d/d(alpha_i) V = c_i * V_{[n] \ {i}}.
struct DerivativeIdentityRow {
    std::size_t index = 0;
    bool free_of_variable = false;
    /// c_i when the derivative is an exact multiple of the face polynomial.
    std::optional<Rational> ratio;
};

/// Evaluates the identity for V and its codimension-one faces, with the
/// simple roots read under `convention`.
std::vector<DerivativeIdentityRow> derivative_identity(const VolumeBasis& basis, RootConvention convention);

}  // namespace dspace
