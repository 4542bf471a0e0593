#include <gtest/gtest.h>

#include "dspace/random.hpp"
#include "dspace/rootsys.hpp"

using namespace dspace;

namespace {

WeightVector w(std::initializer_list<Rational> v) { return WeightVector(v); }

}  // namespace

TEST(Cartan, LabeledMatrices) {
    EXPECT_EQ(CartanSystem::of_type('A', 2).cartan(), QMatrix::from_rows({{2, -1}, {-1, 2}}));
    EXPECT_EQ(CartanSystem::of_type('G', 2).cartan(), QMatrix::from_rows({{2, -1}, {-3, 2}}));
    EXPECT_EQ(CartanSystem::of_type('B', 2).cartan(), QMatrix::from_rows({{2, -1}, {-2, 2}}));
    EXPECT_EQ(determinant(CartanSystem::of_label("B2").cartan()), Rational(2));
    EXPECT_EQ(determinant(CartanSystem::of_label("G2").cartan()), Rational(1));
    EXPECT_EQ(CartanSystem::of_label("E8").rank(), 8u);
    EXPECT_EQ(CartanSystem::of_label("D5").label(), "D5");
}

TEST(Cartan, KnownDeterminants) {
    // det A_n = n+1, B_n = C_n = 2, D_n = 4, E_n = 9-n, F4 = G2 = 1
    for (unsigned n = 1; n <= 8; ++n) EXPECT_EQ(determinant(CartanSystem::of_type('A', n).cartan()), Rational(n + 1));
    for (unsigned n = 2; n <= 8; ++n) {
        EXPECT_EQ(determinant(CartanSystem::of_type('B', n).cartan()), Rational(2));
        EXPECT_EQ(determinant(CartanSystem::of_type('C', n).cartan()), Rational(2));
    }
    for (unsigned n = 4; n <= 8; ++n) EXPECT_EQ(determinant(CartanSystem::of_type('D', n).cartan()), Rational(4));
    for (unsigned n = 6; n <= 8; ++n) EXPECT_EQ(determinant(CartanSystem::of_type('E', n).cartan()), Rational(9 - n));
    EXPECT_EQ(determinant(CartanSystem::of_label("F4").cartan()), Rational(1));
}

TEST(Cartan, Validation) {
    EXPECT_THROW(CartanSystem::of_label("D3"), std::invalid_argument);
    EXPECT_THROW(CartanSystem::of_label("E9"), std::invalid_argument);
    EXPECT_THROW(CartanSystem::of_label("A0"), std::invalid_argument);
    EXPECT_THROW(CartanSystem::of_label("3A"), std::invalid_argument);
    EXPECT_THROW(CartanSystem::of_matrix(QMatrix::from_rows({{2, 1}, {-1, 2}})), std::invalid_argument);
    EXPECT_THROW(CartanSystem::of_matrix(QMatrix::from_rows({{2, -1}, {0, 2}})), std::invalid_argument);
    EXPECT_THROW(CartanSystem::of_matrix(QMatrix::from_rows({{1, -1}, {-1, 2}})), std::invalid_argument);
    EXPECT_THROW(CartanSystem::of_matrix(QMatrix::from_rows({{2, Rational(-1, 2)}, {-1, 2}})), std::invalid_argument);
    EXPECT_NO_THROW(CartanSystem::of_matrix(QMatrix::from_rows({{2, -1}, {-3, 2}})));
}

TEST(Cartan, SimpleRoots) {
    EXPECT_EQ(CartanSystem::of_label("A2").simple_root(0), w({2, -1}));
    EXPECT_EQ(CartanSystem::of_label("G2").simple_root(0), w({2, -1}));
    EXPECT_EQ(CartanSystem::of_label("G2", RootConvention::Column).simple_root(0), w({2, -3}));
    const CartanSystem g2 = CartanSystem::of_label("G2", RootConvention::Column);
    EXPECT_EQ(g2.root_matrix(), g2.cartan().transpose());
}

TEST(Weyl, Reflections) {
    const CartanSystem a2 = CartanSystem::of_label("A2");
    EXPECT_EQ(reflect(a2, 0, w({1, 0})), w({-1, 1}));
    EXPECT_EQ(reflect(a2, 0, w({0, 3})), w({0, 3}));
    Sampler rng(51);
    for (const CartanSystem& sys : finite_types_up_to(4)) {
        WeightVector lambda(sys.rank());
        for (auto& c : lambda) c = rng.rational();
        for (std::size_t i = 0; i < sys.rank(); ++i) {
            EXPECT_EQ(reflect(sys, i, reflect(sys, i, lambda)), lambda);
            EXPECT_EQ(reflect(sys, i, sys.simple_root(i)), [&] {
                WeightVector neg = sys.simple_root(i);
                for (auto& c : neg) c = -c;
                return neg;
            }());
        }
    }
}

TEST(Weyl, Orbits) {
    const CartanSystem a2 = CartanSystem::of_label("A2");
    EXPECT_EQ(weyl_orbit(a2, w({1, 1})).size(), 6u);
    EXPECT_EQ(weyl_orbit(a2, w({1, 0})).size(), 3u);
    EXPECT_EQ(weyl_orbit(CartanSystem::of_label("B2"), w({1, 1})).size(), 8u);
    const OrbitSet zero = weyl_orbit(CartanSystem::of_label("C3"), w({0, 0, 0}));
    EXPECT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero.contains(w({0, 0, 0})));
    EXPECT_TRUE(weyl_orbit(a2, w({1, 1})).contains(w({-1, -1})));
    EXPECT_THROW(weyl_orbit(CartanSystem::of_label("E8"), WeightVector(8, Rational(1)), 1000), OrbitCapExceeded);
    EXPECT_THROW(weyl_orbit(a2, w({1})), DimensionError);
}

TEST(Weyl, GroupOrders) {
    EXPECT_EQ(weyl_order(CartanSystem::of_label("A1")), 2u);
    EXPECT_EQ(weyl_order(CartanSystem::of_label("A3")), 24u);
    EXPECT_EQ(weyl_order(CartanSystem::of_label("G2")), 12u);
    EXPECT_EQ(weyl_order(CartanSystem::of_label("B3")), 48u);
    EXPECT_EQ(weyl_order(CartanSystem::of_label("D4")), 192u);
    EXPECT_EQ(weyl_order(CartanSystem::of_label("F4")), 1152u);
}

TEST(Weyl, OrdersAgreeUnderBothConventions) {
    for (const CartanSystem& sys : finite_types_up_to(4)) {
        EXPECT_EQ(weyl_order(sys), weyl_order(sys.with_convention(RootConvention::Column))) << *sys.label();
    }
}

TEST(Dynkin, Components) {
    const CartanSystem a3 = CartanSystem::of_label("A3");
    EXPECT_EQ(dynkin_components(a3, {0, 2}), (std::vector<Subset>{{0}, {2}}));
    EXPECT_EQ(dynkin_components(a3, {0, 1, 2}), (std::vector<Subset>{{0, 1, 2}}));
    EXPECT_TRUE(dynkin_components(a3, {}).empty());
    EXPECT_EQ(dynkin_components(CartanSystem::of_label("D4"), {0, 2, 3}).size(), 3u);
}

TEST(Dynkin, ParabolicIndex) {
    EXPECT_EQ(parabolic_index(CartanSystem::of_label("A2"), {1}), 3u);
    EXPECT_EQ(parabolic_index(CartanSystem::of_label("A3"), {0, 1, 2}), 1u);
    EXPECT_EQ(parabolic_index(CartanSystem::of_label("B2"), {}), 8u);
    EXPECT_EQ(parabolic_index(CartanSystem::of_label("A3"), {0, 2}), 6u);
}

TEST(Dynkin, ParabolicIndexIsOrbitSize) {
    // [W : W_J] = size of the orbit of a weight whose stabilizer is W_J
    for (const CartanSystem& sys : finite_types_up_to(3)) {
        for (const Subset& j : nonempty_subsets(sys.rank())) {
            WeightVector lambda(sys.rank(), Rational(1));
            for (std::size_t k : j) lambda[k] = 0;
            EXPECT_EQ(weyl_orbit(sys, lambda).size(), parabolic_index(sys, j));
        }
    }
}

TEST(Types, Catalogue) {
    const auto all = finite_types_up_to(8);
    EXPECT_EQ(all.size(), 8u + 7u + 7u + 5u + 3u + 1u + 1u);
    for (const CartanSystem& sys : all) {
        for (const Subset& s : nonempty_subsets(sys.rank())) {
            const Rational minor = principal_minor(sys.cartan(), s);
            EXPECT_TRUE(minor.is_integer() && minor.sign() > 0) << *sys.label();
        }
    }
}
