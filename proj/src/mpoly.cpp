#include "dspace/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace dspace {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::unit(std::size_t nvars, std::size_t j) {
    Monomial m(nvars);
    m.exponents_.at(j) = 1;
    return m;
}

unsigned Monomial::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0u); }

bool Monomial::is_squarefree() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](unsigned e) { return e <= 1; });
}

Subset Monomial::support() const {
    Subset s;
    for (std::size_t j = 0; j < exponents_.size(); ++j) {
        if (exponents_[j] != 0) s.push_back(j);
    }
    return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial m = *this;
    for (std::size_t j = 0; j < exponents_.size(); ++j) m.exponents_[j] += other.exponents_[j];
    return m;
}

bool GrevlexDescending::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da > db;
    for (std::size_t j = a.nvars(); j-- > 0;) {
        if (a[j] != b[j]) return a[j] < b[j];
    }
    return false;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back(0);
        return out;
    }
    std::vector<unsigned> e(nvars, 0);
    // enumerate compositions of `degree` into nvars parts
    auto rec = [&](auto&& self, std::size_t j, unsigned left) -> void {
        if (j + 1 == nvars) {
            e[j] = left;
            out.emplace_back(e);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[j] = k;
            self(self, j + 1, left - k);
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), GrevlexDescending{});
    return out;
}

// ---------------------------------------------------------------- MPoly

MPoly MPoly::constant(std::size_t nvars, const Rational& c) { return term(Monomial(nvars), c); }

MPoly MPoly::variable(std::size_t nvars, std::size_t j) {
    if (j >= nvars) throw std::out_of_range("variable index out of range");
    return term(Monomial::unit(nvars, j), Rational(1));
}

MPoly MPoly::term(const Monomial& m, const Rational& c) {
    MPoly p(m.nvars());
    p.add_term(m, c);
    return p;
}

std::optional<unsigned> MPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();  // grevlex is degree-compatible
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

Rational MPoly::coefficient(const Monomial& m) const {
    if (m.nvars() != nvars_) throw DimensionError("monomial has the wrong number of variables");
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw DimensionError("monomial has the wrong number of variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
    if (rhs.nvars_ != nvars_) throw DimensionError("polynomials in different rings");
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
    if (rhs.nvars_ != nvars_) throw DimensionError("polynomials in different rings");
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
    if (rhs.nvars_ != lhs.nvars_) throw DimensionError("polynomials in different rings");
    MPoly out(lhs.nvars_);
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MPoly scale(const MPoly& p, const Rational& c) {
    MPoly out(p.nvars());
    if (c.is_zero()) return out;
    for (const auto& [m, a] : p.terms()) out.add_term(m, a * c);
    return out;
}

// ---------------------------------------------------------------- calculus

MPoly partial(const MPoly& p, std::size_t j) {
    if (j >= p.nvars()) throw std::out_of_range("partial: variable index out of range");
    MPoly out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m[j] == 0) continue;
        Monomial d = m;
        --d[j];
        out.add_term(d, c * Rational(static_cast<long>(m[j])));
    }
    return out;
}

MPoly directional(const MPoly& p, std::span<const Rational> v) {
    if (v.size() != p.nvars()) throw DimensionError("directional: vector length mismatch");
    MPoly out(p.nvars());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (!v[j].is_zero()) out += scale(partial(p, j), v[j]);
    }
    return out;
}

MPoly shift(const MPoly& p, std::span<const Rational> v) {
    if (v.size() != p.nvars()) throw DimensionError("shift: vector length mismatch");
    const std::size_t n = p.nvars();
    MPoly out(n);
    for (const auto& [m, c] : p.terms()) {
        // prod_j (x_j - v_j)^{b_j} = prod_j sum_k C(b_j,k) (-v_j)^k x_j^{b_j-k}
        MPoly expansion = MPoly::constant(n, c);
        for (std::size_t j = 0; j < n; ++j) {
            if (m[j] == 0) continue;
            MPoly factor(n);
            const Rational neg = -v[j];
            Rational power(1);
            mpz_class binom = 1;
            for (unsigned k = 0; k <= m[j]; ++k) {
                Monomial e(n);
                e[j] = m[j] - k;
                factor.add_term(e, Rational(binom) * power);
                power *= neg;
                binom = binom * (m[j] - k) / (k + 1);
            }
            expansion = expansion * factor;
        }
        out += expansion;
    }
    return out;
}

MPoly homogeneous_component(const MPoly& p, unsigned d) {
    MPoly out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() == d) out.add_term(m, c);
    }
    return out;
}

bool is_free_of(const MPoly& p, std::size_t j) {
    if (j >= p.nvars()) throw std::out_of_range("is_free_of: variable index out of range");
    return std::all_of(p.terms().begin(), p.terms().end(), [j](const auto& t) { return t.first[j] == 0; });
}

MPoly apply_operator(const MPoly& q, const MPoly& p) {
    if (q.nvars() != p.nvars()) throw DimensionError("apply_operator: rings differ");
    const std::size_t n = p.nvars();
    MPoly out(n);
    for (const auto& [g, a] : q.terms()) {
        for (const auto& [b, c] : p.terms()) {
            // d^g x^b = prod_j b_j!/(b_j-g_j)! x^{b-g}, zero unless g <= b
            bool divides = true;
            for (std::size_t j = 0; j < n && divides; ++j) divides = g[j] <= b[j];
            if (!divides) continue;
            mpz_class factor = 1;
            Monomial r(n);
            for (std::size_t j = 0; j < n; ++j) {
                for (unsigned k = 0; k < g[j]; ++k) factor *= b[j] - k;
                r[j] = b[j] - g[j];
            }
            out.add_term(r, a * c * Rational(factor));
        }
    }
    return out;
}

Rational pairing(const MPoly& q, const MPoly& p) {
    return apply_operator(q, p).coefficient(Monomial(p.nvars()));
}

Rational evaluate(const MPoly& p, std::span<const Rational> point) {
    if (point.size() != p.nvars()) throw DimensionError("evaluate: point length mismatch");
    Rational sum(0);
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (std::size_t j = 0; j < point.size(); ++j) {
            if (m[j] != 0) t *= pow(point[j], m[j]);
        }
        sum += t;
    }
    return sum;
}

MPoly embed(const MPoly& p, std::size_t nvars, const Subset& targets) {
    if (targets.size() != p.nvars()) throw DimensionError("embed: target list length mismatch");
    MPoly out(nvars);
    for (const auto& [m, c] : p.terms()) {
        Monomial e(nvars);
        for (std::size_t k = 0; k < targets.size(); ++k) {
            if (targets[k] >= nvars) throw std::out_of_range("embed: target index out of range");
            e[targets[k]] += m[k];
        }
        out.add_term(e, c);
    }
    return out;
}

// ---------------------------------------------------------------- text I/O

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

    MPoly parse() {
        MPoly out(nvars_);
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        parse_term(out, sign);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') throw ParseError("expected '+' or '-'", pos_);
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                if (peek() == '-') sign = -sign;
                ++pos_;
            }
            parse_term(out, sign);
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool peek_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }

    mpz_class parse_int() {
        skip_ws();
        const std::size_t start = pos_;
        while (peek_digit()) ++pos_;
        if (start == pos_) throw ParseError("expected integer", start);
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    void parse_factor(Monomial& m) {
        skip_ws();
        if (at_end() || peek() != 'x') throw ParseError("expected variable 'x<index>'", pos_);
        const std::size_t start = pos_;
        ++pos_;
        if (!peek_digit()) throw ParseError("expected variable index", pos_);
        const mpz_class index = parse_int();
        if (index < 1 || index > static_cast<unsigned long>(nvars_)) {
            throw ParseError("variable index out of range (1.." + std::to_string(nvars_) + ")", start);
        }
        unsigned exponent = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            const std::size_t epos = pos_;
            const mpz_class e = parse_int();
            if (!e.fits_uint_p()) throw ParseError("exponent too large", epos);
            exponent = static_cast<unsigned>(e.get_ui());
        }
        m[index.get_ui() - 1] += exponent;
    }

    void parse_term(MPoly& out, int sign) {
        skip_ws();
        Rational coef(sign);
        Monomial m(nvars_);
        bool need_factor = true;
        if (peek_digit()) {
            const std::size_t start = pos_;
            const mpz_class num = parse_int();
            mpz_class den = 1;
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                den = parse_int();
                if (den == 0) throw ParseError("zero denominator", start);
            }
            coef *= Rational(mpq_class(num, den));
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
            } else if (at_end() || peek() != 'x') {
                need_factor = false;
            }
        } else if (at_end() || peek() != 'x') {
            throw ParseError("expected coefficient or variable", pos_);
        }
        if (need_factor) {
            parse_factor(m);
            for (;;) {
                skip_ws();
                if (at_end() || peek() != '*') break;
                ++pos_;
                parse_factor(m);
            }
        }
        out.add_term(m, coef);
    }

    std::string_view text_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text, std::size_t nvars) { return PolyParser(text, nvars).parse(); }

std::string render_monomial(const Monomial& m) {
    std::string s;
    for (std::size_t j = 0; j < m.nvars(); ++j) {
        if (m[j] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(j + 1);
        if (m[j] > 1) s += '^' + std::to_string(m[j]);
    }
    return s.empty() ? "1" : s;
}

std::string render(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (first) {
            if (c.sign() < 0) s += '-';
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        const Rational a = abs(c);
        if (m.degree() == 0) {
            s += a.str();
        } else if (a == Rational(1)) {
            s += render_monomial(m);
        } else {
            s += a.str() + '*' + render_monomial(m);
        }
    }
    return s;
}

}  // namespace dspace
