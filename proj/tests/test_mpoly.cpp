#include <gtest/gtest.h>

#include "dspace/mpoly.hpp"
#include "dspace/random.hpp"

using namespace dspace;

namespace {

MPoly P(const char* text, std::size_t n = 3) { return parse_poly(text, n); }

RationalVector vec(std::initializer_list<Rational> v) { return RationalVector(v); }

}  // namespace

TEST(Monomial, Basics) {
    const Monomial m(std::vector<unsigned>{2, 0, 1});
    EXPECT_EQ(m.degree(), 3u);
    EXPECT_FALSE(m.is_squarefree());
    EXPECT_EQ(m.support(), (Subset{0, 2}));
    EXPECT_EQ(m * Monomial::unit(3, 1), Monomial(std::vector<unsigned>{2, 1, 1}));
    EXPECT_EQ(render_monomial(Monomial(3)), "1");
    EXPECT_EQ(render_monomial(m), "x1^2*x3");
}

TEST(Monomial, GrevlexOrder) {
    // degree 2 in 3 variables, largest first
    std::vector<std::string> names;
    for (const Monomial& m : monomials_of_degree(3, 2)) names.push_back(render_monomial(m));
    const std::vector<std::string> expected{"x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2"};
    EXPECT_EQ(names, expected);
    EXPECT_EQ(monomials_of_degree(4, 3).size(), 20u);
    EXPECT_EQ(monomials_of_degree(2, 0).size(), 1u);
}

TEST(MPoly, Ring) {
    EXPECT_EQ(P("x1 + x2") * P("x1 - x2"), P("x1^2 - x2^2"));
    EXPECT_EQ(P("x1*x2") + MPoly(3), P("x1*x2"));
    EXPECT_EQ(scale(P("x1*x2"), Rational(3, 2)), P("3/2*x1*x2"));
    EXPECT_TRUE((P("x1 + x3") - P("x3 + x1")).is_zero());
    EXPECT_EQ(-P("x1 - 2"), P("2 - x1"));
    EXPECT_FALSE(MPoly(2).degree().has_value());
    EXPECT_EQ(P("x1^3 + x2").degree(), 3u);
    EXPECT_TRUE(P("x1*x2 + x3^2").is_homogeneous());
    EXPECT_FALSE(P("x1 + 1").is_homogeneous());
}

TEST(MPoly, Coefficients) {
    EXPECT_EQ(P("x1*x2 + 3*x1").coefficient(Monomial(std::vector<unsigned>{1, 1, 0})), Rational(1));
    EXPECT_EQ(P("x1*x2 + 3*x1").coefficient(Monomial(std::vector<unsigned>{0, 0, 1})), Rational(0));
    EXPECT_EQ(P("2/3*x1^2").coefficient(Monomial(std::vector<unsigned>{2, 0, 0})), Rational(2, 3));
}

TEST(MPoly, Derivatives) {
    EXPECT_EQ(partial(P("x1^2*x2"), 0), P("2*x1*x2"));
    EXPECT_TRUE(partial(P("x2^3"), 0).is_zero());
    EXPECT_EQ(partial(P("x1^3"), 0), P("3*x1^2"));
    EXPECT_EQ(directional(P("x1^2", 2), vec({2, -1})), P("4*x1", 2));
    EXPECT_TRUE(directional(P("x1^2*x2", 2), vec({0, 0})).is_zero());
    EXPECT_EQ(directional(P("x1*x2", 2), vec({1, 1})), P("x1 + x2", 2));
}

TEST(MPoly, Shift) {
    EXPECT_EQ(shift(P("x1^2", 2), vec({1, 0})), P("x1^2 - 2*x1 + 1", 2));
    EXPECT_EQ(shift(P("x1*x2", 2), vec({1, 1})), P("x1*x2 - x1 - x2 + 1", 2));
    const MPoly p = P("x1^3*x2 - 1/2*x2^2 + 7", 2);
    EXPECT_EQ(shift(p, vec({0, 0})), p);
}

TEST(MPoly, ShiftComposesAndMatchesEvaluation) {
    Sampler rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 4));
        const MPoly p = rng.polynomial(n, 5, 4);
        RationalVector u(n), v(n), uv(n), x(n), xv(n);
        for (std::size_t j = 0; j < n; ++j) {
            u[j] = rng.rational();
            v[j] = rng.rational();
            x[j] = rng.rational();
            uv[j] = u[j] + v[j];
            xv[j] = x[j] - v[j];
        }
        EXPECT_EQ(shift(shift(p, u), v), shift(p, uv));
        EXPECT_EQ(evaluate(shift(p, v), x), evaluate(p, xv));
    }
}

TEST(MPoly, DerivativesCommute) {
    Sampler rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 4));
        const MPoly p = rng.polynomial(n, 6, 5);
        RationalVector v(n);
        for (auto& c : v) c = rng.rational();
        const auto j = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
        EXPECT_EQ(partial(directional(p, v), j), directional(partial(p, j), v));
        EXPECT_EQ(shift(partial(p, j), v), partial(shift(p, v), j));
    }
}

TEST(MPoly, HomogeneousComponents) {
    EXPECT_EQ(homogeneous_component(P("x1^2 + x1 + 1"), 1), P("x1"));
    EXPECT_TRUE(homogeneous_component(P("x1^2 + x1 + 1"), 5).is_zero());
    EXPECT_EQ(homogeneous_component(P("x1*x2 - x3^2"), 2), P("x1*x2 - x3^2"));
    Sampler rng(23);
    const MPoly p = rng.polynomial(3, 6, 8);
    MPoly sum(3);
    for (unsigned d = 0; d <= 6; ++d) sum += homogeneous_component(p, d);
    EXPECT_EQ(sum, p);
}

TEST(MPoly, Pairing) {
    EXPECT_EQ(apply_operator(P("x1"), P("x1^2")), P("2*x1"));
    EXPECT_EQ(pairing(P("x1*x2"), P("x1*x2")), Rational(1));
    EXPECT_EQ(pairing(P("x1^2"), P("x2^3")), Rational(0));
    EXPECT_EQ(pairing(MPoly::constant(3, 1), P("x1 + 5/2")), Rational(5, 2));
}

TEST(MPoly, PairingGramMatrixIsDiagonal) {
    for (unsigned d = 0; d <= 4; ++d) {
        const auto monomials = monomials_of_degree(3, d);
        for (const Monomial& a : monomials) {
            for (const Monomial& b : monomials) {
                Rational expected(0);
                if (a == b) {
                    expected = 1;
                    for (std::size_t j = 0; j < 3; ++j)
                        for (unsigned k = 2; k <= a[j]; ++k) expected *= Rational(k);
                }
                EXPECT_EQ(pairing(MPoly::term(a, 1), MPoly::term(b, 1)), expected);
            }
        }
    }
}

TEST(MPoly, Evaluate) {
    EXPECT_EQ(evaluate(P("x1^2 + x2", 2), vec({2, 3})), Rational(7));
    EXPECT_EQ(evaluate(P("x1^2 + x2 - 4/3", 2), vec({0, 0})), Rational(-4, 3));
    EXPECT_EQ(evaluate(MPoly(2), vec({5, 1})), Rational(0));
}

TEST(MPoly, Embed) {
    EXPECT_EQ(embed(P("2*x1^2*x2", 2), 4, {1, 3}), parse_poly("2*x2^2*x4", 4));
    EXPECT_EQ(embed(MPoly::constant(0, 3), 2, {}), MPoly::constant(2, 3));
}

TEST(Text, ParseAndRender) {
    const MPoly p = P("3*x1^2*x2 - 1/2*x3");
    EXPECT_EQ(p.terms().size(), 2u);
    EXPECT_EQ(render(p), "3*x1^2*x2 - 1/2*x3");
    EXPECT_EQ(render(P("x1 + x1")), "2*x1");
    EXPECT_EQ(render(P("x2 - x2")), "0");
    EXPECT_EQ(render(P("-x3 + 1 + x1*x1")), "x1^2 - x3 + 1");
    EXPECT_EQ(render(P("x1*x2^0")), "x1");
}

TEST(Text, Errors) {
    EXPECT_THROW(parse_poly("x0", 2), ParseError);
    EXPECT_THROW(parse_poly("x3", 2), ParseError);
    EXPECT_THROW(parse_poly("", 2), ParseError);
    EXPECT_THROW(parse_poly("x1 +", 2), ParseError);
    EXPECT_THROW(parse_poly("1/0*x1", 2), ParseError);
    EXPECT_THROW(parse_poly("x1 ** x2", 2), ParseError);
    EXPECT_THROW(parse_poly("y1", 2), ParseError);
    try {
        parse_poly("x1 + x9", 2);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 5u);
    }
}

TEST(Text, RoundTrip) {
    Sampler rng(24);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 5));
        const MPoly p = rng.polynomial(n, 6, 6);
        EXPECT_EQ(parse_poly(render(p), n), p);
    }
}
