#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "dspace/linalg.hpp"
#include "dspace/random.hpp"

using namespace dspace;

namespace {

// Cofactor expansion along the first row.
Rational laplace_det(const QMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return Rational(1);
    Rational total(0);
    for (std::size_t j = 0; j < n; ++j) {
        QMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, k = 0; c < n; ++c)
                if (c != j) minor(r - 1, k++) = a(r, c);
        const Rational term = a(0, j) * laplace_det(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

// Product of pivots from plain rational elimination with row swaps.
Rational pivot_product_det(QMatrix a) {
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = a(i, k) / a(k, k);
            for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
        }
    }
    return det;
}

QMatrix product(const QMatrix& a, const QMatrix& b) {
    QMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
    return out;
}

const QMatrix kA2 = QMatrix::from_rows({{2, -1}, {-1, 2}});
const QMatrix kPerm3 = QMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
const QMatrix kRankOne = QMatrix::from_rows({{1, 1}, {2, 2}});

}  // namespace

TEST(Determinant, Examples) {
    EXPECT_EQ(determinant(kA2), Rational(3));
    EXPECT_EQ(determinant(QMatrix::identity(4)), Rational(1));
    EXPECT_EQ(determinant(kRankOne), Rational(0));
    EXPECT_EQ(determinant(kPerm3), Rational(1));
    EXPECT_THROW(determinant(QMatrix(2, 3)), DimensionError);
}

TEST(Determinant, AgreesWithOracles) {
    Sampler rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 6));
        QMatrix a = rng.matrix(n);
        if (trial % 5 == 0 && n > 1) {
            for (std::size_t c = 0; c < n; ++c) a(n - 1, c) = a(0, c) * Rational(3, 2);
        }
        const Rational d = determinant(a);
        EXPECT_EQ(d, laplace_det(a));
        EXPECT_EQ(d, pivot_product_det(a));
    }
}

TEST(Determinant, Multiplicative) {
    Sampler rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 5));
        const QMatrix a = rng.matrix(n), b = rng.matrix(n);
        EXPECT_EQ(determinant(product(a, b)), determinant(a) * determinant(b));
        EXPECT_EQ(determinant(a.transpose()), determinant(a));
    }
}

TEST(PrincipalMinor, Examples) {
    EXPECT_EQ(principal_minor(kA2, {0, 1}), Rational(3));
    EXPECT_EQ(principal_minor(kA2, {}), Rational(1));
    EXPECT_EQ(principal_minor(kPerm3, {0}), Rational(0));
    EXPECT_EQ(principal_minor(kA2, {1}), Rational(2));
}

TEST(PrincipalMinor, Verdicts) {
    const QMatrix g2 = QMatrix::from_rows({{2, -1}, {-3, 2}});
    EXPECT_TRUE(all_principal_minors_nonzero(g2).all_nonzero);
    const MinorsVerdict perm = all_principal_minors_nonzero(kPerm3);
    EXPECT_FALSE(perm.all_nonzero);
    EXPECT_EQ(perm.witness, Subset{0});
    EXPECT_TRUE(all_principal_minors_nonzero(QMatrix::identity(5)).all_nonzero);

    // Only the {2,3} block is singular; the witness is the smallest such subset.
    const QMatrix m = QMatrix::from_rows({{1, 0, 0}, {0, 1, 1}, {0, 1, 1}});
    EXPECT_EQ(all_principal_minors_nonzero(m).witness, (Subset{1, 2}));
}

TEST(PrincipalMinor, PermutationSimilarityPermutesMinors) {
    Sampler rng(9);
    for (int trial = 0; trial < 15; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(2, 5));
        const QMatrix a = rng.matrix(n);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t k = n - 1; k > 0; --k) std::swap(perm[k], perm[static_cast<std::size_t>(rng.integer(0, static_cast<long>(k)))]);
        QMatrix b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b(i, j) = a(perm[i], perm[j]);
        for (const Subset& s : nonempty_subsets(n)) {
            Subset image;
            for (std::size_t j : s) image.push_back(perm[j]);
            std::sort(image.begin(), image.end());
            EXPECT_EQ(principal_minor(b, s), principal_minor(a, image));
        }
    }
}

TEST(Subsets, OrderAndCount) {
    const auto all = nonempty_subsets(3);
    const std::vector<Subset> expected{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    EXPECT_EQ(all, expected);
    EXPECT_EQ(nonempty_subsets(8).size(), 255u);
    EXPECT_TRUE(nonempty_subsets(0).empty());
}

TEST(Nullspace, Examples) {
    EXPECT_TRUE(nullspace(QMatrix::identity(3)).empty());
    const auto zero = nullspace(QMatrix(2, 3));
    ASSERT_EQ(zero.size(), 3u);
    for (std::size_t k = 0; k < 3; ++k) {
        RationalVector e(3, Rational(0));
        e[k] = 1;
        EXPECT_EQ(zero[k], e);
    }
    const auto k = nullspace(kRankOne);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], (RationalVector{-1, 1}));
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(QMatrix::identity(5)), 5u);
    EXPECT_EQ(rank(QMatrix(3, 4)), 0u);
    EXPECT_EQ(rank(kRankOne), 1u);
}

TEST(Nullspace, RankNullityAndKernel) {
    Sampler rng(10);
    for (int trial = 0; trial < 40; ++trial) {
        const auto rows = static_cast<std::size_t>(rng.integer(1, 5));
        const auto cols = static_cast<std::size_t>(rng.integer(1, 6));
        QMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.coin() ? rng.rational() : Rational(0);
        if (rows > 1 && rng.coin())
            for (std::size_t j = 0; j < cols; ++j) a(rows - 1, j) = a(0, j) - a(1 % rows, j);
        const auto kernel = nullspace(a);
        EXPECT_EQ(rank(a) + kernel.size(), cols);
        for (const RationalVector& v : kernel) {
            for (std::size_t i = 0; i < rows; ++i) {
                Rational s(0);
                for (std::size_t j = 0; j < cols; ++j) s += a(i, j) * v[j];
                EXPECT_TRUE(s.is_zero());
            }
        }
        if (!kernel.empty()) EXPECT_EQ(rank(QMatrix::from_rows(kernel)), kernel.size());
    }
}

TEST(Solve, RecoversSolution) {
    Sampler rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 5));
        QMatrix a = rng.matrix(n);
        if (determinant(a).is_zero()) continue;
        RationalVector x(n), b(n, Rational(0));
        for (auto& v : x) v = rng.rational();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b[i] += a(i, j) * x[j];
        EXPECT_EQ(solve(a, b), x);
    }
    EXPECT_THROW(solve(kRankOne, RationalVector{1, 2}), std::exception);
}
