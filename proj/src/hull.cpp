#include "dspace/hull.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dspace/echelon.hpp"

namespace dspace {

namespace {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;

mpz_class int_det(IntMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class previous = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
            }
        }
        previous = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

mpz_class dot(const IntVector& a, const IntVector& b) {
    mpz_class s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

struct Facet {
    std::vector<std::size_t> vertices;  // sorted point indices
    IntVector normal;                   // outward
    mpz_class offset;                   // normal . x <= offset on the hull
};

class IncrementalHull {
public:
    IncrementalHull(const std::vector<IntVector>& points, std::size_t dim) : points_(points), dim_(dim) {}

    void build() {
        const std::vector<std::size_t> simplex = initial_simplex();
        // interior reference: centroid of the simplex, scaled by dim+1
        interior_ = IntVector(dim_, 0);
        for (std::size_t v : simplex)
            for (std::size_t k = 0; k < dim_; ++k) interior_[k] += points_[v][k];
        for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
            std::vector<std::size_t> verts;
            for (std::size_t k = 0; k < simplex.size(); ++k) {
                if (k != skip) verts.push_back(simplex[k]);
            }
            add_facet(std::move(verts));
        }
        std::vector<bool> in_simplex(points_.size(), false);
        for (std::size_t v : simplex) in_simplex[v] = true;
        for (std::size_t p = 0; p < points_.size(); ++p) {
            if (!in_simplex[p]) insert(p);
        }
        validate();
    }

    // Returns sum |det| over the cones from the vertex centroid, together
    // with the scale m^dim the centroid coordinates were multiplied by.
    std::pair<mpz_class, mpz_class> scaled_volume() const {
        std::vector<bool> is_vertex(points_.size(), false);
        for (const Facet& f : facets_)
            for (std::size_t v : f.vertices) is_vertex[v] = true;
        IntVector centroid_sum(dim_, 0);
        long count = 0;
        for (std::size_t p = 0; p < points_.size(); ++p) {
            if (!is_vertex[p]) continue;
            ++count;
            for (std::size_t k = 0; k < dim_; ++k) centroid_sum[k] += points_[p][k];
        }
        mpz_class total = 0;
        for (const Facet& f : facets_) {
            IntMatrix edges;
            for (std::size_t v : f.vertices) {
                IntVector row(dim_);
                for (std::size_t k = 0; k < dim_; ++k) row[k] = count * points_[v][k] - centroid_sum[k];
                edges.push_back(std::move(row));
            }
            total += abs(int_det(std::move(edges)));
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(count), dim_);
        return {total, scale};
    }

private:
    std::vector<std::size_t> initial_simplex() const {
        std::vector<std::size_t> chosen{0};
        RowEchelon echelon(dim_);
        for (std::size_t p = 1; p < points_.size() && chosen.size() <= dim_; ++p) {
            SparseRow diff;
            for (std::size_t k = 0; k < dim_; ++k) {
                mpz_class d = points_[p][k] - points_[0][k];
                if (d != 0) diff.emplace_back(k, d);
            }
            if (echelon.insert(std::move(diff))) chosen.push_back(p);
        }
        if (chosen.size() != dim_ + 1) throw InvariantViolation("hull: no full-dimensional initial simplex");
        return chosen;
    }

    void add_facet(std::vector<std::size_t> verts) {
        std::sort(verts.begin(), verts.end());
        const IntVector& base = points_[verts[0]];
        IntMatrix edges;
        for (std::size_t k = 1; k < verts.size(); ++k) {
            IntVector e(dim_);
            for (std::size_t c = 0; c < dim_; ++c) e[c] = points_[verts[k]][c] - base[c];
            edges.push_back(std::move(e));
        }
        // generalized cross product of the dim-1 edge vectors
        IntVector normal(dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            IntMatrix minor;
            for (const IntVector& e : edges) {
                IntVector r;
                for (std::size_t c = 0; c < dim_; ++c) {
                    if (c != j) r.push_back(e[c]);
                }
                minor.push_back(std::move(r));
            }
            normal[j] = int_det(std::move(minor));
            if (j % 2 == 1) normal[j] = -normal[j];
        }
        mpz_class offset = dot(normal, base);
        const mpz_class side = dot(normal, interior_) - static_cast<long>(dim_ + 1) * offset;
        if (side == 0) throw InvariantViolation("hull: degenerate facet");
        if (side > 0) {
            for (auto& v : normal) v = -v;
            offset = -offset;
        }
        facets_.push_back(Facet{std::move(verts), std::move(normal), std::move(offset)});
    }

    void insert(std::size_t p) {
        const IntVector& x = points_[p];
        std::vector<Facet> kept;
        std::map<std::vector<std::size_t>, int> ridge_count;
        bool any_visible = false;
        for (Facet& f : facets_) {
            if (dot(f.normal, x) > f.offset) {
                any_visible = true;
                for (std::size_t skip = 0; skip < f.vertices.size(); ++skip) {
                    std::vector<std::size_t> ridge;
                    for (std::size_t k = 0; k < f.vertices.size(); ++k) {
                        if (k != skip) ridge.push_back(f.vertices[k]);
                    }
                    ++ridge_count[ridge];
                }
            } else {
                kept.push_back(std::move(f));
            }
        }
        facets_ = std::move(kept);
        if (!any_visible) return;
        for (const auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;  // interior to the visible region
            std::vector<std::size_t> verts = ridge;
            verts.push_back(p);
            add_facet(std::move(verts));
        }
    }

    void validate() const {
        std::map<std::vector<std::size_t>, int> ridge_count;
        for (const Facet& f : facets_) {
            for (std::size_t skip = 0; skip < f.vertices.size(); ++skip) {
                std::vector<std::size_t> ridge;
                for (std::size_t k = 0; k < f.vertices.size(); ++k) {
                    if (k != skip) ridge.push_back(f.vertices[k]);
                }
                ++ridge_count[ridge];
            }
            for (const IntVector& x : points_) {
                if (dot(f.normal, x) > f.offset) throw InvariantViolation("hull: point beyond a final facet");
            }
        }
        for (const auto& [ridge, count] : ridge_count) {
            if (count != 2) throw InvariantViolation("hull: boundary is not closed");
        }
    }

    const std::vector<IntVector>& points_;
    std::size_t dim_;
    IntVector interior_;
    std::vector<Facet> facets_;
};

mpz_class factorial(std::size_t n) {
    mpz_class f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
    return f;
}

}  // namespace

HullVolumeResult hull_volume(std::span<const RationalVector> points) {
    if (points.empty()) throw std::invalid_argument("hull_volume: empty point set");
    const std::size_t dim = points.front().size();
    if (dim == 0) throw DimensionError("hull_volume: zero-dimensional points");
    if (dim > kMaxHullDimension) {
        throw UnsupportedDimension("hull_volume supports ambient dimension <= " + std::to_string(kMaxHullDimension));
    }

    // Common denominator turns every coordinate into an integer.
    mpz_class denominator = 1;
    for (const RationalVector& p : points) {
        if (p.size() != dim) throw DimensionError("hull_volume: points of mixed dimension");
        for (const Rational& c : p) mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    std::vector<IntVector> ints;
    ints.reserve(points.size());
    for (const RationalVector& p : points) {
        IntVector v(dim);
        for (std::size_t k = 0; k < dim; ++k) v[k] = p[k].raw().get_num() * (denominator / p[k].raw().get_den());
        ints.push_back(std::move(v));
    }
    std::sort(ints.begin(), ints.end());
    ints.erase(std::unique(ints.begin(), ints.end()), ints.end());

    RowEchelon span(dim);
    for (const IntVector& p : ints) {
        SparseRow diff;
        for (std::size_t k = 0; k < dim; ++k) {
            mpz_class d = p[k] - ints[0][k];
            if (d != 0) diff.emplace_back(k, d);
        }
        span.insert(std::move(diff));
    }
    HullVolumeResult result;
    result.dim = span.rank();
    if (result.dim < dim) return result;

    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), denominator.get_mpz_t(), dim);
    if (dim == 1) {
        result.volume = Rational(mpq_class(ints.back()[0] - ints.front()[0], denominator));
        return result;
    }
    IncrementalHull hull(ints, dim);
    hull.build();
    const auto [total, centroid_scale] = hull.scaled_volume();
    result.volume = Rational(mpq_class(total, factorial(dim) * centroid_scale * scale));
    return result;
}

}  // namespace dspace
