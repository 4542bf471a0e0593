#include "dspace/gradedspace.hpp"

#include <map>
#include <string>

#include "dspace/diffops.hpp"
#include "dspace/echelon.hpp"

namespace dspace {

namespace {

using MonomialIndex = std::map<Monomial, std::size_t, GrevlexDescending>;

MonomialIndex index_of(const std::vector<Monomial>& monomials) {
    MonomialIndex index;
    for (std::size_t k = 0; k < monomials.size(); ++k) index.emplace(monomials[k], k);
    return index;
}

void require_square(const QMatrix& m) {
    if (!m.is_square() || m.rows() == 0) throw DimensionError("graded space of a non-square matrix");
}

// Rows: for i ascending, then each monomial x^a of degree d-2 in grevlex
// order, the coefficient of x^a in d/dx_i (D_i p) as a linear form in the
// coefficients of p. Columns: monomials of degree d.
RowEchelon primal_system(const QMatrix& m, const std::vector<Monomial>& columns, unsigned d) {
    const std::size_t n = m.rows();
    RowEchelon echelon(columns.size());
    if (d < 2) return echelon;
    const MonomialIndex index = index_of(columns);
    const std::vector<Monomial> lower = monomials_of_degree(n, d - 2);
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (std::size_t i = 0; i < n; ++i) {
        for (const Monomial& a : lower) {
            entries.clear();
            for (std::size_t j = 0; j < n; ++j) {
                if (m(i, j).is_zero()) continue;
                Monomial b = a;
                ++b[i];
                ++b[j];
                // d/dx_i d/dx_j x^b = b_i (b_j - [i==j]) x^a
                const long factor = static_cast<long>(b[i]) * static_cast<long>(i == j ? b[j] - 1 : b[j]);
                entries.emplace_back(index.at(b), m(i, j) * Rational(factor));
            }
            echelon.insert(integer_row(entries));
        }
    }
    return echelon;
}

MPoly from_coordinates(const std::vector<Monomial>& monomials, const std::vector<Rational>& v, std::size_t n) {
    MPoly p(n);
    for (std::size_t k = 0; k < v.size(); ++k) p.add_term(monomials[k], v[k]);
    return p;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

DegreeBasis degree_basis(const QMatrix& m, unsigned d) {
    require_square(m);
    const std::size_t n = m.rows();
    const std::vector<Monomial> columns = monomials_of_degree(n, d);
    const RowEchelon echelon = primal_system(m, columns, d);
    DegreeBasis out;
    const auto free = echelon.free_columns();
    const auto vectors = echelon.nullspace_basis();
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        out.elements.push_back(from_coordinates(columns, vectors[k], n));
        out.free_monomials.push_back(columns[free[k]]);
    }
    return out;
}

std::vector<MPoly> basis_degree(const QMatrix& m, unsigned d) { return degree_basis(m, d).elements; }

GradedBasis::GradedBasis(const QMatrix& m, unsigned dmax) : m_(m) {
    require_square(m);
    const OperatorContext ctx(m);
    for (unsigned d = 0; d <= dmax; ++d) {
        DegreeBasis piece = degree_basis(m, d);
        for (std::size_t k = 0; k < piece.elements.size(); ++k) {
            const MPoly& e = piece.elements[k];
            if (!in_derivative_space(ctx, e).verdict) {
                throw InvariantViolation("graded basis element fails the derivative criterion in degree " +
                                         std::to_string(d));
            }
            // unit coefficient at its own free monomial, zero at the others
            for (std::size_t l = 0; l < piece.free_monomials.size(); ++l) {
                if (e.coefficient(piece.free_monomials[l]) != Rational(k == l ? 1 : 0)) {
                    throw InvariantViolation("graded basis elements are not independent in degree " +
                                             std::to_string(d));
                }
            }
        }
        pieces_.push_back(std::move(piece));
    }
}

std::vector<std::size_t> GradedBasis::dims() const {
    std::vector<std::size_t> dims;
    for (const auto& piece : pieces_) dims.push_back(piece.elements.size());
    return dims;
}

std::size_t GradedBasis::total_dim() const {
    std::size_t total = 0;
    for (const auto& piece : pieces_) total += piece.elements.size();
    return total;
}

std::optional<std::vector<Rational>> GradedBasis::coordinates(const MPoly& p) const {
    if (p.nvars() != m_.rows()) throw DimensionError("polynomial ring does not match matrix");
    if (p.degree() && *p.degree() > dmax()) return std::nullopt;
    std::vector<Rational> coords;
    for (unsigned d = 0; d <= dmax(); ++d) {
        const DegreeBasis& piece = pieces_[d];
        MPoly residual = homogeneous_component(p, d);
        for (std::size_t k = 0; k < piece.elements.size(); ++k) {
            const Rational c = residual.coefficient(piece.free_monomials[k]);
            coords.push_back(c);
            residual -= scale(piece.elements[k], c);
        }
        if (!residual.is_zero()) return std::nullopt;
    }
    return coords;
}

std::size_t dual_quotient_dim(const QMatrix& m, unsigned d) {
    require_square(m);
    const std::size_t n = m.rows();
    const std::vector<Monomial> columns = monomials_of_degree(n, d);
    if (d < 2) return columns.size();
    const MonomialIndex index = index_of(columns);
    RowEchelon echelon(columns.size());
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (std::size_t i = 0; i < n; ++i) {
        for (const Monomial& g : monomials_of_degree(n, d - 2)) {
            // y^g * y_i * sum_j M_ij y_j
            entries.clear();
            for (std::size_t j = 0; j < n; ++j) {
                if (m(i, j).is_zero()) continue;
                Monomial b = g;
                ++b[i];
                ++b[j];
                entries.emplace_back(index.at(b), m(i, j));
            }
            echelon.insert(integer_row(entries));
        }
    }
    return columns.size() - echelon.rank();
}

bool has_binomial_profile(const std::vector<std::size_t>& dims, std::size_t n) {
    for (std::size_t d = 0; d < dims.size(); ++d) {
        if (dims[d] != binomial(n, d)) return false;
    }
    return true;
}

unsigned default_dmax(const QMatrix& m) { return static_cast<unsigned>(m.rows()) + 2; }

HilbertReport hilbert_report(const QMatrix& m, unsigned dmax) {
    require_square(m);
    const std::size_t n = m.rows();
    HilbertReport report;
    report.dmax = dmax;
    for (unsigned d = 0; d <= dmax; ++d) {
        const std::vector<Monomial> columns = monomials_of_degree(n, d);
        report.dims_primal.push_back(columns.size() - primal_system(m, columns, d).rank());
        report.dims_dual.push_back(dual_quotient_dim(m, d));
        if (report.dims_primal.back() != report.dims_dual.back()) {
            throw InvariantViolation("primal and dual Hilbert functions differ in degree " + std::to_string(d));
        }
    }
    report.binomial_profile = has_binomial_profile(report.dims_primal, n);
    const MinorsVerdict minors = all_principal_minors_nonzero(m);
    report.minors_nonzero = minors.all_nonzero;
    report.witness = minors.witness;
    return report;
}

std::optional<std::vector<Rational>> membership_in_span(const QMatrix& m, const MPoly& p, unsigned dmax) {
    return GradedBasis(m, dmax).coordinates(p);
}

}  // namespace dspace
