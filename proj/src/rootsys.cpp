#include "dspace/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace dspace {

std::string to_string(RootConvention c) { return c == RootConvention::Row ? "row" : "column"; }

RootConvention parse_convention(std::string_view text) {
    if (text == "row") return RootConvention::Row;
    if (text == "column") return RootConvention::Column;
    throw std::invalid_argument("convention must be 'row' or 'column'");
}

namespace {

void link(QMatrix& c, std::size_t i, std::size_t j, long cij = -1, long cji = -1) {
    c(i, j) = Rational(cij);
    c(j, i) = Rational(cji);
}

QMatrix chain(std::size_t n) {
    QMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) c(i, i) = Rational(2);
    for (std::size_t i = 0; i + 1 < n; ++i) link(c, i, i + 1);
    return c;
}

QMatrix e_type(std::size_t n) {
    // Bourbaki numbering: 1-3-4-5-...-n with 2 attached to 4.
    QMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) c(i, i) = Rational(2);
    link(c, 0, 2);
    link(c, 1, 3);
    for (std::size_t i = 2; i + 1 < n; ++i) link(c, i, i + 1);
    return c;
}

bool valid_type(char type, unsigned rank) {
    switch (type) {
        case 'A': return rank >= 1;
        case 'B':
        case 'C': return rank >= 2;
        case 'D': return rank >= 4;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

}  // namespace

CartanSystem::CartanSystem(QMatrix c, std::optional<std::string> label, RootConvention convention)
    : c_(std::move(c)), label_(std::move(label)), convention_(convention) {}

CartanSystem CartanSystem::of_type(char type, unsigned rank, RootConvention convention) {
    type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
    if (!valid_type(type, rank)) {
        throw std::invalid_argument(std::string("no finite root system of type ") + type + std::to_string(rank));
    }
    const std::size_t n = rank;
    QMatrix c;
    switch (type) {
        case 'A': c = chain(n); break;
        case 'B':
            c = chain(n);
            c(n - 1, n - 2) = Rational(-2);
            break;
        case 'C':
            c = chain(n);
            c(n - 2, n - 1) = Rational(-2);
            break;
        case 'D':
            c = chain(n - 1);
            {
                QMatrix d(n, n);
                for (std::size_t i = 0; i + 1 < n; ++i)
                    for (std::size_t j = 0; j + 1 < n; ++j) d(i, j) = c(i, j);
                d(n - 1, n - 1) = Rational(2);
                link(d, n - 3, n - 1);
                c = std::move(d);
            }
            break;
        case 'E': c = e_type(n); break;
        case 'F':
            c = chain(4);
            c(2, 1) = Rational(-2);
            break;
        case 'G':
            c = chain(2);
            c(1, 0) = Rational(-3);
            break;
    }
    CartanSystem sys = of_matrix(std::move(c), convention);
    sys.label_ = std::string(1, type) + std::to_string(rank);
    for (const Subset& s : nonempty_subsets(n)) {
        if (principal_minor(sys.c_, s).sign() <= 0) {
            throw InvariantViolation("labeled Cartan matrix " + *sys.label_ + " has a non-positive principal minor");
        }
    }
    return sys;
}

CartanSystem CartanSystem::of_label(std::string_view label, RootConvention convention) {
    if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label.front()))) {
        throw std::invalid_argument("malformed type label '" + std::string(label) + "'");
    }
    const std::string_view digits = label.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
        digits.size() > 3) {
        throw std::invalid_argument("malformed type label '" + std::string(label) + "'");
    }
    return of_type(label.front(), static_cast<unsigned>(std::stoul(std::string(digits))), convention);
}

CartanSystem CartanSystem::of_matrix(QMatrix c, RootConvention convention) {
    if (!c.is_square() || c.rows() == 0) throw DimensionError("Cartan matrix must be square and nonempty");
    const std::size_t n = c.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = c(i, j);
            if (!v.is_integer()) throw std::invalid_argument("Cartan matrix entries must be integers");
            if (i == j && v != Rational(2)) throw std::invalid_argument("Cartan matrix diagonal must be 2");
            if (i != j && v.sign() > 0) throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
            if (i != j && v.is_zero() != c(j, i).is_zero()) {
                throw std::invalid_argument("Cartan matrix zero pattern must be symmetric");
            }
        }
    }
    return CartanSystem(std::move(c), std::nullopt, convention);
}

CartanSystem CartanSystem::with_convention(RootConvention convention) const {
    CartanSystem s = *this;
    s.convention_ = convention;
    return s;
}

WeightVector CartanSystem::simple_root(std::size_t i) const {
    if (i >= rank()) throw std::out_of_range("simple root index out of range");
    if (convention_ == RootConvention::Row) {
        const auto r = c_.row(i);
        return {r.begin(), r.end()};
    }
    return c_.column(i);
}

QMatrix CartanSystem::root_matrix() const { return convention_ == RootConvention::Row ? c_ : c_.transpose(); }

CartanSystem CartanSystem::subsystem(const Subset& indices) const {
    return CartanSystem(c_.principal_submatrix(indices), std::nullopt, convention_);
}

WeightVector reflect(const CartanSystem& sys, std::size_t i, const WeightVector& lambda) {
    if (lambda.size() != sys.rank()) throw DimensionError("weight vector length does not match rank");
    const WeightVector alpha = sys.simple_root(i);
    WeightVector out = lambda;
    const Rational t = lambda[i];
    if (t.is_zero()) return out;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= t * alpha[k];
    return out;
}

bool OrbitSet::contains(const WeightVector& v) const { return std::binary_search(points.begin(), points.end(), v); }

OrbitSet weyl_orbit(const CartanSystem& sys, const WeightVector& lambda, std::size_t cap) {
    if (lambda.size() != sys.rank()) throw DimensionError("weight vector length does not match rank");
    std::vector<WeightVector> roots;
    for (std::size_t i = 0; i < sys.rank(); ++i) roots.push_back(sys.simple_root(i));

    std::set<WeightVector> seen{lambda};
    std::deque<WeightVector> queue{lambda};
    while (!queue.empty()) {
        const WeightVector v = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (v[i].is_zero()) continue;
            WeightVector w = v;
            for (std::size_t k = 0; k < w.size(); ++k) w[k] -= v[i] * roots[i][k];
            if (seen.insert(w).second) {
                if (seen.size() > cap) {
                    throw OrbitCapExceeded("Weyl orbit exceeds the cap of " + std::to_string(cap) + " points");
                }
                queue.push_back(std::move(w));
            }
        }
    }
    return OrbitSet{{seen.begin(), seen.end()}};
}

std::uint64_t weyl_order(const CartanSystem& sys, std::size_t cap) {
    return weyl_orbit(sys, WeightVector(sys.rank(), Rational(1)), cap).size();
}

std::vector<Subset> dynkin_components(const CartanSystem& sys, const Subset& subset) {
    for (std::size_t k : subset) {
        if (k >= sys.rank()) throw std::out_of_range("subset index out of range");
    }
    Subset remaining = subset;
    std::sort(remaining.begin(), remaining.end());
    std::vector<Subset> components;
    std::vector<bool> used(remaining.size(), false);
    for (std::size_t start = 0; start < remaining.size(); ++start) {
        if (used[start]) continue;
        Subset component{remaining[start]};
        used[start] = true;
        for (std::size_t head = 0; head < component.size(); ++head) {
            for (std::size_t k = 0; k < remaining.size(); ++k) {
                if (!used[k] && !sys.cartan()(component[head], remaining[k]).is_zero()) {
                    used[k] = true;
                    component.push_back(remaining[k]);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

std::uint64_t parabolic_index(const CartanSystem& sys, const Subset& subset, std::size_t cap) {
    const std::uint64_t whole = weyl_order(sys, cap);
    std::uint64_t parabolic = 1;
    for (const Subset& component : dynkin_components(sys, subset)) {
        parabolic *= weyl_order(sys.subsystem(component), cap);
    }
    if (whole % parabolic != 0) throw InvariantViolation("parabolic subgroup order does not divide |W|");
    return whole / parabolic;
}

std::vector<CartanSystem> finite_types_up_to(unsigned max_rank) {
    std::vector<CartanSystem> out;
    for (unsigned r = 1; r <= max_rank; ++r) out.push_back(CartanSystem::of_type('A', r));
    for (unsigned r = 2; r <= max_rank; ++r) out.push_back(CartanSystem::of_type('B', r));
    for (unsigned r = 2; r <= max_rank; ++r) out.push_back(CartanSystem::of_type('C', r));
    for (unsigned r = 4; r <= max_rank; ++r) out.push_back(CartanSystem::of_type('D', r));
    for (unsigned r = 6; r <= std::min(max_rank, 8u); ++r) out.push_back(CartanSystem::of_type('E', r));
    if (max_rank >= 4) out.push_back(CartanSystem::of_type('F', 4));
    if (max_rank >= 2) out.push_back(CartanSystem::of_type('G', 2));
    return out;
}

}  // namespace dspace
