#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "dspace/linalg.hpp"
#include "dspace/mpoly.hpp"

namespace dspace {

/// A square matrix whose rows drive the finite-difference and
/// directional-derivative operators.
class OperatorContext {
public:
    explicit OperatorContext(QMatrix m);

    std::size_t n() const { return m_.rows(); }
    const QMatrix& matrix() const { return m_; }
    std::span<const Rational> row(std::size_t i) const { return m_.row(i); }

private:
    QMatrix m_;
};

struct MembershipWitness {
    bool verdict = true;
    std::optional<std::size_t> failing_index;  // 0-based
    std::optional<MPoly> offending;            // the nonzero d/dx_i of the operator image
};

/// p(x - M_i) - p(x)
MPoly finite_difference(const OperatorContext& ctx, std::size_t i, const MPoly& p);
/// M_i . grad p
MPoly row_derivative(const OperatorContext& ctx, std::size_t i, const MPoly& p);

/// p is in Delta(M): every finite difference Delta_i p is free of x_i.
MembershipWitness in_difference_space(const OperatorContext& ctx, const MPoly& p);
/// p is in D(M): every directional derivative D_i p is free of x_i.
MembershipWitness in_derivative_space(const OperatorContext& ctx, const MPoly& p);

/// Checks Delta_i p == sum_{s=1}^{deg p} (-1)^s / s! D_i^s p exactly.
bool verify_expansion(const OperatorContext& ctx, std::size_t i, const MPoly& p);

}  // namespace dspace
