#include "dspace/geometricity.hpp"

#include "dspace/diffops.hpp"

namespace dspace {

std::string to_string(GeometricityStatus s) {
    switch (s) {
        case GeometricityStatus::Geometric: return "Geometric";
        case GeometricityStatus::NotInSpace: return "NotInSpace";
        case GeometricityStatus::InternalResidual: return "InternalResidual";
    }
    return "?";
}

GeometricityCertificate decompose(const VolumeBasis& basis, const MPoly& p) {
    const std::size_t n = basis.sys.rank();
    if (p.nvars() != n) throw DimensionError("polynomial ring does not match the root system rank");

    GeometricityCertificate cert;
    MembershipWitness member = in_derivative_space(OperatorContext(basis.sys.root_matrix()), p);
    if (!member.verdict) {
        cert.status = GeometricityStatus::NotInSpace;
        cert.witness = GeometricityWitness{*member.failing_index, std::move(*member.offending)};
        return cert;
    }

    MPoly residual = p;
    for (const auto& [subset, v] : basis.entries) {
        Monomial beta(n);
        for (std::size_t j : subset) beta[j] = 1;
        const Rational mu = p.coefficient(beta) / v.coefficient(beta);
        cert.coefficients.emplace(subset, mu);
        residual -= scale(v, mu);
    }
    if (!residual.is_zero()) {
        cert.status = GeometricityStatus::InternalResidual;
        cert.coefficients.clear();
        cert.residual = std::move(residual);
    }
    return cert;
}

bool is_geometric(const VolumeBasis& basis, const MPoly& p) {
    return decompose(basis, p).status == GeometricityStatus::Geometric;
}

MPoly round_trip(const VolumeBasis& basis, const std::map<Subset, Rational, SubsetLess>& coefficients) {
    MPoly out(basis.sys.rank());
    for (const auto& [subset, mu] : coefficients) out += scale(basis.at(subset), mu);
    return out;
}

}  // namespace dspace
