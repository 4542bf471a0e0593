#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dspace/rational.hpp"

namespace dspace {

/// Sparse integer row, entries sorted by column with no zeros.
using SparseRow = std::vector<std::pair<std::size_t, mpz_class>>;

/// Clears denominators of a rational row (column, value) list, dropping zeros.
SparseRow integer_row(std::span<const std::pair<std::size_t, Rational>> entries);

/// Incremental fraction-free row echelon form over the integers.
///
/// Each inserted row is reduced against the pivot rows by integer
/// cross-multiplication and then divided by its content, so entries stay
/// primitive. The reduced echelon form, and therefore the canonical
/// nullspace, depends only on the row space and the column order.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t cols) : cols_(cols) {}

    /// Returns true when the row was independent of the rows seen so far.
    bool insert(SparseRow row);

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }

    std::vector<std::size_t> pivot_columns() const;
    std::vector<std::size_t> free_columns() const;

    /// Canonical nullspace: for each free column f (ascending) the vector
    /// with x_f = 1, other free coordinates 0.
    std::vector<std::vector<Rational>> nullspace_basis() const;

private:
    std::size_t cols_;
    // leading column -> primitive row with positive leading entry
    std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace dspace
