#include "dspace/linalg.hpp"

#include <algorithm>
#include <utility>

#include "dspace/echelon.hpp"

namespace dspace {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<RationalVector>& rows) {
    if (rows.empty()) return {};
    QMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
        std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
    }
    return m;
}

RationalVector QMatrix::column(std::size_t j) const {
    RationalVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QMatrix QMatrix::principal_submatrix(const Subset& indices) const {
    if (!is_square()) throw DimensionError("principal submatrix of a non-square matrix");
    for (std::size_t k : indices) {
        if (k >= rows_) throw std::out_of_range("principal submatrix index out of range");
    }
    QMatrix s(indices.size(), indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = 0; b < indices.size(); ++b) s(a, b) = (*this)(indices[a], indices[b]);
    return s;
}

Rational determinant(const QMatrix& a) {
    if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return Rational(1);

    // Clear denominators row by row; det(A) = det(B) / prod(scale).
    std::vector<std::vector<mpz_class>> b(n, std::vector<mpz_class>(n));
    mpz_class scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).raw().get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) b[i][j] = a(i, j).raw().get_num() * (l / a(i, j).raw().get_den());
        scale_product *= l;
    }

    int sign = 1;
    mpz_class previous = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && b[p][k] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            std::swap(b[p], b[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                b[i][j] = b[i][j] * b[k][k] - b[i][k] * b[k][j];
                mpz_divexact(b[i][j].get_mpz_t(), b[i][j].get_mpz_t(), previous.get_mpz_t());
            }
            b[i][k] = 0;
        }
        previous = b[k][k];
    }
    mpz_class det = b[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rational(mpq_class(det, scale_product));
}

Rational principal_minor(const QMatrix& a, const Subset& subset) {
    if (subset.empty()) return Rational(1);
    return determinant(a.principal_submatrix(subset));
}

std::vector<Subset> nonempty_subsets(std::size_t n) {
    std::vector<Subset> out;
    for (std::size_t k = 1; k <= n; ++k) {
        // lexicographic k-combinations of {0..n-1}
        Subset s(k);
        for (std::size_t i = 0; i < k; ++i) s[i] = i;
        for (;;) {
            out.push_back(s);
            std::size_t i = k;
            while (i > 0 && s[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++s[i - 1];
            for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
        }
    }
    return out;
}

MinorsVerdict all_principal_minors_nonzero(const QMatrix& a) {
    if (!a.is_square()) throw DimensionError("principal minors of a non-square matrix");
    for (const Subset& s : nonempty_subsets(a.rows())) {
        if (principal_minor(a, s).is_zero()) return {false, s};
    }
    return {};
}

namespace {

RowEchelon echelon_of(const QMatrix& a) {
    RowEchelon e(a.cols());
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        entries.clear();
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a(i, j).is_zero()) entries.emplace_back(j, a(i, j));
        }
        e.insert(integer_row(entries));
    }
    return e;
}

}  // namespace

std::vector<RationalVector> nullspace(const QMatrix& a) { return echelon_of(a).nullspace_basis(); }

std::size_t rank(const QMatrix& a) { return echelon_of(a).rank(); }

RationalVector solve(const QMatrix& a, std::span<const Rational> rhs) {
    if (!a.is_square() || rhs.size() != a.rows()) throw DimensionError("solve: shape mismatch");
    const std::size_t n = a.rows();
    std::vector<RationalVector> aug(n, RationalVector(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
        aug[i][n] = rhs[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && aug[p][k].is_zero()) ++p;
        if (p == n) throw std::domain_error("solve: singular system");
        std::swap(aug[p], aug[k]);
        const Rational inv = Rational(1) / aug[k][k];
        for (std::size_t j = k; j <= n; ++j) aug[k][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || aug[i][k].is_zero()) continue;
            const Rational f = aug[i][k];
            for (std::size_t j = k; j <= n; ++j) aug[i][j] -= f * aug[k][j];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

}  // namespace dspace
