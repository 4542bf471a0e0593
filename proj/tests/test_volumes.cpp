#include <gtest/gtest.h>

#include <algorithm>

#include "dspace/diffops.hpp"
#include "dspace/gradedspace.hpp"
#include "dspace/random.hpp"
#include "dspace/volumes.hpp"

using namespace dspace;

namespace {

Rational shoelace_of_orbit(const OrbitSet& orbit) {
    // Orbit points of a regular weight are in convex position: sort by angle
    // around the origin using exact half-plane and cross-product tests.
    std::vector<RationalVector> pts = orbit.points;
    const auto half = [](const RationalVector& p) { return p[1].sign() > 0 || (p[1].is_zero() && p[0].sign() > 0) ? 0 : 1; };
    std::sort(pts.begin(), pts.end(), [&](const RationalVector& a, const RationalVector& b) {
        if (half(a) != half(b)) return half(a) < half(b);
        return (a[0] * b[1] - a[1] * b[0]).sign() > 0;
    });
    Rational twice(0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& a = pts[i];
        const auto& b = pts[(i + 1) % pts.size()];
        twice += a[0] * b[1] - a[1] * b[0];
    }
    return abs(twice) / Rational(2);
}

Subset all_of(std::size_t n) {
    Subset s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = j;
    return s;
}

Rational squarefree_top(const MPoly& v, std::size_t n) {
    Monomial m(n);
    for (std::size_t j = 0; j < n; ++j) m[j] = 1;
    return v.coefficient(m);
}

}  // namespace

TEST(Permutohedron, Examples) {
    const CartanSystem a1 = CartanSystem::of_label("A1");
    EXPECT_EQ(permutohedron_volume(a1, {Rational(5, 3)}), Rational(10, 3));
    EXPECT_EQ(permutohedron_volume(CartanSystem::of_label("B2"), {0, 0}), Rational(0));
    const CartanSystem a2 = CartanSystem::of_label("A2");
    EXPECT_EQ(permutohedron_volume(a2, {1, 1}), shoelace_of_orbit(weyl_orbit(a2, {1, 1})));
    EXPECT_EQ(permutohedron_volume(a2, {1, 1}), Rational(9));
}

TEST(Permutohedron, ShoelaceOnRank2Types) {
    Sampler rng(71);
    for (const char* label : {"A2", "B2", "C2", "G2"}) {
        const CartanSystem sys = CartanSystem::of_label(label);
        for (int trial = 0; trial < 5; ++trial) {
            const WeightVector lambda{Rational(rng.integer(1, 9), rng.integer(1, 3)), Rational(rng.integer(1, 9), rng.integer(1, 3))};
            EXPECT_EQ(permutohedron_volume(sys, lambda), shoelace_of_orbit(weyl_orbit(sys, lambda))) << label;
        }
    }
}

TEST(Permutohedron, ScaleLaw) {
    Sampler rng(72);
    for (const char* label : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
        const CartanSystem sys = CartanSystem::of_label(label);
        WeightVector lambda(sys.rank());
        for (auto& c : lambda) c = Rational(rng.integer(1, 6), rng.integer(1, 3));
        const Rational t(rng.integer(1, 7), rng.integer(1, 4));
        WeightVector scaled(lambda);
        for (auto& c : scaled) c *= t;
        EXPECT_EQ(permutohedron_volume(sys, scaled),
                  pow(t, static_cast<unsigned>(sys.rank())) * permutohedron_volume(sys, lambda))
            << label;
    }
}

TEST(VolumePolynomial, Examples) {
    EXPECT_EQ(volume_polynomial(CartanSystem::of_label("A1")), parse_poly("2*x1", 1));
    const MPoly a3 = volume_polynomial(CartanSystem::of_label("A3"));
    EXPECT_GT(squarefree_top(a3, 3).sign(), 0);
    EXPECT_THROW(volume_polynomial(CartanSystem::of_label("A5")), UnsupportedDimension);
}

TEST(VolumePolynomial, InterpolatesHullVolumes) {
    Sampler rng(73);
    for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
        const CartanSystem sys = CartanSystem::of_label(label);
        const MPoly v = volume_polynomial(sys);
        EXPECT_TRUE(v.is_homogeneous());
        EXPECT_EQ(v.degree(), static_cast<unsigned>(sys.rank()));
        for (int trial = 0; trial < 3; ++trial) {
            WeightVector lambda(sys.rank());
            for (auto& c : lambda) c = Rational(rng.integer(1, 12), rng.integer(1, 5));
            EXPECT_EQ(evaluate(v, lambda), permutohedron_volume(sys, lambda)) << label;
        }
        EXPECT_TRUE(in_derivative_space(OperatorContext(sys.root_matrix()), v).verdict) << label;
    }
}

TEST(VolumePolynomial, UniqueTopDegreeElement) {
    for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
        const CartanSystem sys = CartanSystem::of_label(label);
        const MPoly v = volume_polynomial(sys);
        const auto top = basis_degree(sys.root_matrix(), static_cast<unsigned>(sys.rank()));
        ASSERT_EQ(top.size(), 1u) << label;
        const auto& [m, c] = *v.terms().begin();
        EXPECT_EQ(scale(top[0], c / top[0].coefficient(m)), v) << label;
    }
}

TEST(FacePolynomial, Examples) {
    const CartanSystem a3 = CartanSystem::of_label("A3");
    EXPECT_EQ(face_volume_polynomial(a3, {}), MPoly::constant(3, 1));
    EXPECT_EQ(face_volume_polynomial(a3, {0, 2}), parse_poly("4*x1*x3", 3));
    EXPECT_EQ(face_volume_polynomial(a3, {0, 1, 2}), volume_polynomial(a3));
    EXPECT_EQ(face_volume_polynomial(a3, {1, 2}), embed(volume_polynomial(CartanSystem::of_label("A2")), 3, {1, 2}));
}

TEST(Basis, Shapes) {
    const VolumeBasis a1 = volume_basis(CartanSystem::of_label("A1"));
    ASSERT_EQ(a1.entries.size(), 2u);
    EXPECT_EQ(a1.at({}), MPoly::constant(1, 1));
    EXPECT_EQ(a1.at({0}), parse_poly("2*x1", 1));

    const VolumeBasis a2 = volume_basis(CartanSystem::of_label("A2"));
    std::vector<std::size_t> profile(3, 0);
    for (const auto& [s, v] : a2.entries) ++profile[*v.degree()];
    EXPECT_EQ(profile, (std::vector<std::size_t>{1, 2, 1}));
    EXPECT_THROW(a2.at({5}), std::out_of_range);
}

TEST(Basis, SquarefreeSignPattern) {
    for (const char* label : {"A3", "B3", "C3", "G2"}) {
        const VolumeBasis b = volume_basis(CartanSystem::of_label(label));
        const std::size_t n = b.sys.rank();
        for (const auto& [j, v] : b.entries) {
            for (const auto& [k, w] : b.entries) {
                Monomial beta(n);
                for (std::size_t i : k) beta[i] = 1;
                const Rational c = v.coefficient(beta);
                if (j == k) {
                    EXPECT_GT(c.sign(), 0);
                } else {
                    EXPECT_TRUE(c.is_zero());
                }
            }
        }
    }
}

TEST(Normalization, RootLatticeValues) {
    const CartanSystem a1 = CartanSystem::of_label("A1");
    EXPECT_EQ(renormalize(parse_poly("2*x1", 1), a1, {0}, Normalization::WeightLattice, Normalization::RootLattice),
              parse_poly("x1", 1));
    EXPECT_EQ(parse_normalization("root"), Normalization::RootLattice);
    EXPECT_THROW(parse_normalization("lattice"), std::invalid_argument);
    Rational factorial(1);
    for (std::size_t n = 1; n <= 3; ++n) {
        factorial *= Rational(static_cast<long>(n));
        const CartanSystem sys = CartanSystem::of_type('A', static_cast<unsigned>(n));
        const VolumeBasis root = volume_basis(sys, Normalization::RootLattice);
        EXPECT_EQ(squarefree_top(root.at(all_of(n)), n), factorial);
    }
}

TEST(Normalization, RatioIsCartanDeterminant) {
    for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
        const CartanSystem sys = CartanSystem::of_label(label);
        const VolumeBasis weight = volume_basis(sys);
        const VolumeBasis root = renormalize(weight, Normalization::RootLattice);
        EXPECT_EQ(weight.at(all_of(sys.rank())), scale(root.at(all_of(sys.rank())), determinant(sys.cartan())));
        EXPECT_EQ(renormalize(root, Normalization::WeightLattice).entries, weight.entries);
        EXPECT_EQ(lattice_ratio(sys, {}), Rational(1));
    }
    EXPECT_EQ(lattice_ratio(CartanSystem::of_label("A3"), {0, 2}), Rational(4));
}

TEST(DerivativeIdentity, RowConvention) {
    for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
        const VolumeBasis b = volume_basis(CartanSystem::of_label(label));
        for (const DerivativeIdentityRow& row : derivative_identity(b, RootConvention::Row)) {
            EXPECT_TRUE(row.free_of_variable) << label << " i=" << row.index;
            ASSERT_TRUE(row.ratio.has_value()) << label;
            EXPECT_GT(row.ratio->sign(), 0);
        }
    }
}
