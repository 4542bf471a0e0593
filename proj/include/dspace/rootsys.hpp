#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dspace/linalg.hpp"

namespace dspace {

/// Which slice of the Cartan matrix gives the weight coordinates of alpha_i.
enum class RootConvention { Row, Column };

std::string to_string(RootConvention c);
RootConvention parse_convention(std::string_view text);

inline constexpr std::size_t kDefaultOrbitCap = 60480;

class OrbitCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Coordinates in the fundamental-weight basis.
using WeightVector = std::vector<Rational>;

/// An integer Cartan matrix with the convention used to read simple roots.
class CartanSystem {
public:
    /// Finite types A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=4), E6-E8, F4, G2.
    static CartanSystem of_type(char type, unsigned rank, RootConvention convention = RootConvention::Row);
    /// Parses labels such as "A3" or "G2".
    static CartanSystem of_label(std::string_view label, RootConvention convention = RootConvention::Row);
    /// Validates the Cartan axioms: integer entries, diagonal 2, off-diagonal
    /// entries <= 0, and C_ij = 0 exactly when C_ji = 0.
    static CartanSystem of_matrix(QMatrix c, RootConvention convention = RootConvention::Row);

    const QMatrix& cartan() const { return c_; }
    std::size_t rank() const { return c_.rows(); }
    const std::optional<std::string>& label() const { return label_; }
    RootConvention convention() const { return convention_; }

    CartanSystem with_convention(RootConvention convention) const;

    /// alpha_i in weight coordinates under the system's convention.
    WeightVector simple_root(std::size_t i) const;
    /// Matrix whose i-th row is simple_root(i): C itself for Row, C^T for Column.
    QMatrix root_matrix() const;

    /// Principal subsystem on the given indices (unlabeled, same convention).
    CartanSystem subsystem(const Subset& indices) const;

private:
    CartanSystem(QMatrix c, std::optional<std::string> label, RootConvention convention);

    QMatrix c_;
    std::optional<std::string> label_;
    RootConvention convention_;
};

/// s_i(lambda) = lambda - lambda_i * alpha_i
WeightVector reflect(const CartanSystem& sys, std::size_t i, const WeightVector& lambda);

/// Deduplicated orbit, sorted lexicographically.
struct OrbitSet {
    std::vector<WeightVector> points;
    std::size_t size() const { return points.size(); }
    bool contains(const WeightVector& v) const;
};

OrbitSet weyl_orbit(const CartanSystem& sys, const WeightVector& lambda, std::size_t cap = kDefaultOrbitCap);

/// |W|, as the orbit size of (1, ..., 1).
std::uint64_t weyl_order(const CartanSystem& sys, std::size_t cap = kDefaultOrbitCap);

/// Connected components of the Dynkin graph restricted to `subset`,
/// ordered by smallest element.
std::vector<Subset> dynkin_components(const CartanSystem& sys, const Subset& subset);

/// [W : W_J]
std::uint64_t parabolic_index(const CartanSystem& sys, const Subset& subset, std::size_t cap = kDefaultOrbitCap);

/// Every labeled finite type of rank <= max_rank, in a fixed order.
std::vector<CartanSystem> finite_types_up_to(unsigned max_rank);

}  // namespace dspace
