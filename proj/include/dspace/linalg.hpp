#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dspace/rational.hpp"

namespace dspace {

using RationalVector = std::vector<Rational>;

/// Sorted list of 0-based indices. Rendered 1-based at every I/O boundary.
using Subset = std::vector<std::size_t>;

/// Orders subsets by cardinality, then lexicographically.
struct SubsetLess {
    bool operator()(const Subset& a, const Subset& b) const {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A proved identity failed to hold on computed data; always an
/// implementation bug, never a legitimate result.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Dense row-major rational matrix.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<RationalVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }
    RationalVector column(std::size_t j) const;

    QMatrix transpose() const;
    QMatrix principal_submatrix(const Subset& indices) const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Fraction-free (Bareiss) determinant.
Rational determinant(const QMatrix& a);

/// Determinant of the rows and columns indexed by `subset`; the empty minor is 1.
Rational principal_minor(const QMatrix& a, const Subset& subset);

struct MinorsVerdict {
    bool all_nonzero = true;
    /// Smallest vanishing subset by cardinality, then lexicographically.
    std::optional<Subset> witness;
};

MinorsVerdict all_principal_minors_nonzero(const QMatrix& a);

/// All nonempty subsets of {0..n-1}, ordered by size and then lexicographically.
std::vector<Subset> nonempty_subsets(std::size_t n);

/// Right-kernel basis: one vector per free column (ascending), with that
/// coordinate 1, the other free coordinates 0, pivots read from the RREF.
std::vector<RationalVector> nullspace(const QMatrix& a);

std::size_t rank(const QMatrix& a);

/// Unique solution of a square nonsingular system.
RationalVector solve(const QMatrix& a, std::span<const Rational> rhs);

}  // namespace dspace
