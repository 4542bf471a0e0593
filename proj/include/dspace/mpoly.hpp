#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dspace/linalg.hpp"
#include "dspace/rational.hpp"

namespace dspace {

/// Exponent vector x^beta in a fixed number of variables.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}

    static Monomial unit(std::size_t nvars, std::size_t j);

    std::size_t nvars() const { return exponents_.size(); }
    unsigned operator[](std::size_t j) const { return exponents_[j]; }
    unsigned& operator[](std::size_t j) { return exponents_[j]; }
    const std::vector<unsigned>& exponents() const { return exponents_; }

    unsigned degree() const;
    bool is_squarefree() const;
    /// Indices with nonzero exponent.
    Subset support() const;

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<unsigned> exponents_;
};

/// Graded reverse lexicographic order with x1 > x2 > ... ; `operator()`
/// answers "a comes before b", i.e. a is the larger monomial.
struct GrevlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of total degree d in n variables, largest first.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Sparse polynomial over Q in a fixed number of variables.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexDescending>;

    explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

    static MPoly constant(std::size_t nvars, const Rational& c);
    static MPoly variable(std::size_t nvars, std::size_t j);
    static MPoly term(const Monomial& m, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; std::nullopt stands for the degree of the zero polynomial.
    std::optional<unsigned> degree() const;
    bool is_homogeneous() const;

    Rational coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
    friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
    friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
    MPoly operator-() const;

    friend bool operator==(const MPoly&, const MPoly&) = default;

private:
    std::size_t nvars_;
    TermMap terms_;
};

MPoly scale(const MPoly& p, const Rational& c);

MPoly partial(const MPoly& p, std::size_t j);
/// sum_j v_j * dp/dx_j
MPoly directional(const MPoly& p, std::span<const Rational> v);
/// p(x - v), expanded term by term with the binomial theorem.
MPoly shift(const MPoly& p, std::span<const Rational> v);
MPoly homogeneous_component(const MPoly& p, unsigned d);
bool is_free_of(const MPoly& p, std::size_t j);

/// q(d/dx_1, ..., d/dx_n) applied to p.
MPoly apply_operator(const MPoly& q, const MPoly& p);
/// Constant term of apply_operator(q, p).
Rational pairing(const MPoly& q, const MPoly& p);

Rational evaluate(const MPoly& p, std::span<const Rational> point);

/// Re-indexes a polynomial into a larger ring: variable k goes to targets[k].
MPoly embed(const MPoly& p, std::size_t nvars, const Subset& targets);

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

MPoly parse_poly(std::string_view text, std::size_t nvars);
std::string render(const MPoly& p);
/// "x1^2*x3" style key; "1" for the constant monomial.
std::string render_monomial(const Monomial& m);

}  // namespace dspace
