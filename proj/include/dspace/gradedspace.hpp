#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dspace/linalg.hpp"
#include "dspace/mpoly.hpp"

namespace dspace {

/// Basis of one graded piece D(M)_d in canonical nullspace form.
struct DegreeBasis {
    std::vector<MPoly> elements;
    /// For each element, the monomial where it has coefficient 1 and every
    /// other element of the piece has coefficient 0.
    std::vector<Monomial> free_monomials;
};

/// Homogeneous degree-d solutions of d/dx_i (D_i p) = 0 for all i.
DegreeBasis degree_basis(const QMatrix& m, unsigned d);
std::vector<MPoly> basis_degree(const QMatrix& m, unsigned d);

/// D(M) truncated at dmax, one piece per degree.
class GradedBasis {
public:
    /// Computes every piece up to dmax and re-checks membership and
    /// independence of each stored element.
    GradedBasis(const QMatrix& m, unsigned dmax);

    const QMatrix& matrix() const { return m_; }
    unsigned dmax() const { return static_cast<unsigned>(pieces_.size()) - 1; }
    const DegreeBasis& piece(unsigned d) const { return pieces_.at(d); }
    std::vector<std::size_t> dims() const;
    std::size_t total_dim() const;

    /// Coordinates of p in the concatenated basis (degree 0 first), or
    /// nullopt when p is not in the truncated space.
    std::optional<std::vector<Rational>> coordinates(const MPoly& p) const;

private:
    QMatrix m_;
    std::vector<DegreeBasis> pieces_;
};

/// dim (S / I_M)_d with I_M = (y_i L_i), computed as dim S_d minus the rank
/// of the degree-d generator products.
std::size_t dual_quotient_dim(const QMatrix& m, unsigned d);

struct HilbertReport {
    std::vector<std::size_t> dims_primal;
    std::vector<std::size_t> dims_dual;
    unsigned dmax = 0;
    bool binomial_profile = false;
    bool minors_nonzero = false;
    std::optional<Subset> witness;
};

/// Both Hilbert functions up to dmax. Throws InvariantViolation if the
/// primal and dual sequences disagree anywhere.
HilbertReport hilbert_report(const QMatrix& m, unsigned dmax);

/// dims[d] == C(n, d) for d <= n and 0 above, over the whole sequence.
bool has_binomial_profile(const std::vector<std::size_t>& dims, std::size_t n);

/// n + 2: two degrees past the predicted top of the binomial profile.
unsigned default_dmax(const QMatrix& m);

std::optional<std::vector<Rational>> membership_in_span(const QMatrix& m, const MPoly& p, unsigned dmax);

}  // namespace dspace
