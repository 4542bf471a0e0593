#include "dspace/diffops.hpp"

#include <stdexcept>
#include <utility>

namespace dspace {

OperatorContext::OperatorContext(QMatrix m) : m_(std::move(m)) {
    if (!m_.is_square() || m_.rows() == 0) throw DimensionError("operator matrix must be square and nonempty");
}

namespace {

void check(const OperatorContext& ctx, std::size_t i, const MPoly& p) {
    if (i >= ctx.n()) throw std::out_of_range("operator index out of range");
    if (p.nvars() != ctx.n()) throw DimensionError("polynomial ring does not match operator matrix");
}

template <class Op>
MembershipWitness membership(const OperatorContext& ctx, const MPoly& p, Op op) {
    if (p.nvars() != ctx.n()) throw DimensionError("polynomial ring does not match operator matrix");
    for (std::size_t i = 0; i < ctx.n(); ++i) {
        MPoly offending = partial(op(ctx, i, p), i);
        if (!offending.is_zero()) return {false, i, std::move(offending)};
    }
    return {};
}

}  // namespace

MPoly finite_difference(const OperatorContext& ctx, std::size_t i, const MPoly& p) {
    check(ctx, i, p);
    return shift(p, ctx.row(i)) - p;
}

MPoly row_derivative(const OperatorContext& ctx, std::size_t i, const MPoly& p) {
    check(ctx, i, p);
    return directional(p, ctx.row(i));
}

MembershipWitness in_difference_space(const OperatorContext& ctx, const MPoly& p) {
    return membership(ctx, p, finite_difference);
}

MembershipWitness in_derivative_space(const OperatorContext& ctx, const MPoly& p) {
    return membership(ctx, p, row_derivative);
}

bool verify_expansion(const OperatorContext& ctx, std::size_t i, const MPoly& p) {
    const MPoly lhs = finite_difference(ctx, i, p);
    MPoly rhs(p.nvars());
    const unsigned d = p.degree().value_or(0);
    MPoly power = p;
    Rational factorial(1);
    for (unsigned s = 1; s <= d; ++s) {
        power = row_derivative(ctx, i, power);
        factorial *= Rational(static_cast<long>(s));
        const Rational sign = (s % 2 == 0) ? Rational(1) : Rational(-1);
        rhs += scale(power, sign / factorial);
    }
    return lhs == rhs;
}

}  // namespace dspace
