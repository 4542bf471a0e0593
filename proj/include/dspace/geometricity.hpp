#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "dspace/mpoly.hpp"
#include "dspace/volumes.hpp"

namespace dspace {

enum class GeometricityStatus { Geometric, NotInSpace, InternalResidual };

std::string to_string(GeometricityStatus s);

struct GeometricityWitness {
    std::size_t index = 0;  // 0-based
    MPoly offending;        // d/dx_i (D_i p), nonzero
};

struct GeometricityCertificate {
    GeometricityStatus status = GeometricityStatus::Geometric;
    /// mu_J for every subset J when Geometric.
    std::map<Subset, Rational, SubsetLess> coefficients;
    std::optional<GeometricityWitness> witness;
    /// p - sum mu_J V_J when the reconstruction fails; signals a bug.
    std::optional<MPoly> residual;
};

/// Runs the derivative criterion first; members of D(C) are expanded with
/// mu_J = [p]_beta / [V_J]_beta over squarefree beta with supp(beta) = J,
/// and the expansion is re-verified exactly.
GeometricityCertificate decompose(const VolumeBasis& basis, const MPoly& p);

bool is_geometric(const VolumeBasis& basis, const MPoly& p);

/// sum_J coefficients[J] * V_J; throws std::out_of_range on an unknown J.
MPoly round_trip(const VolumeBasis& basis, const std::map<Subset, Rational, SubsetLess>& coefficients);

}  // namespace dspace
