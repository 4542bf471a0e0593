#include "dspace/echelon.hpp"

#include <algorithm>

namespace dspace {

namespace {

// Returns a*x - b*y.
SparseRow combine(const mpz_class& a, const SparseRow& x, const mpz_class& b, const SparseRow& y) {
    SparseRow out;
    out.reserve(x.size() + y.size());
    auto ix = x.begin();
    auto iy = y.begin();
    mpz_class t;
    while (ix != x.end() || iy != y.end()) {
        if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
            out.emplace_back(ix->first, a * ix->second);
            ++ix;
        } else if (ix == x.end() || iy->first < ix->first) {
            out.emplace_back(iy->first, -(b * iy->second));
            ++iy;
        } else {
            t = a * ix->second - b * iy->second;
            if (t != 0) out.emplace_back(ix->first, t);
            ++ix;
            ++iy;
        }
    }
    return out;
}

void make_primitive(SparseRow& row) {
    if (row.empty()) return;
    mpz_class g = abs(row.front().second);
    for (const auto& [col, value] : row) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
    }
    if (row.front().second < 0) g = -g;
    if (g != 1) {
        for (auto& [col, value] : row) mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), g.get_mpz_t());
    }
}

// Eliminates the entry of `row` at the leading column of `pivot`.
void eliminate(SparseRow& row, const mpz_class& entry, const SparseRow& pivot) {
    const mpz_class& lead = pivot.front().second;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), entry.get_mpz_t());
    const mpz_class a = lead / g;
    const mpz_class b = entry / g;
    row = combine(a, row, b, pivot);
    make_primitive(row);
}

}  // namespace

SparseRow integer_row(std::span<const std::pair<std::size_t, Rational>> entries) {
    mpz_class denominator = 1;
    for (const auto& [col, value] : entries) {
        mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), value.raw().get_den_mpz_t());
    }
    SparseRow row;
    row.reserve(entries.size());
    for (const auto& [col, value] : entries) {
        if (value.is_zero()) continue;
        row.emplace_back(col, value.raw().get_num() * (denominator / value.raw().get_den()));
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicate columns
    SparseRow merged;
    for (auto& entry : row) {
        if (!merged.empty() && merged.back().first == entry.first) {
            merged.back().second += entry.second;
            if (merged.back().second == 0) merged.pop_back();
        } else {
            merged.push_back(std::move(entry));
        }
    }
    return merged;
}

bool RowEchelon::insert(SparseRow row) {
    make_primitive(row);
    while (!row.empty()) {
        const auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            pivots_.emplace(row.front().first, std::move(row));
            return true;
        }
        const mpz_class entry = row.front().second;
        eliminate(row, entry, it->second);
    }
    return false;
}

std::vector<std::size_t> RowEchelon::pivot_columns() const {
    std::vector<std::size_t> cols;
    cols.reserve(pivots_.size());
    for (const auto& [col, row] : pivots_) cols.push_back(col);
    return cols;
}

std::vector<std::size_t> RowEchelon::free_columns() const {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (!pivots_.contains(c)) cols.push_back(c);
    }
    return cols;
}

std::vector<std::vector<Rational>> RowEchelon::nullspace_basis() const {
    // Back-substitute into reduced form, highest leading column first.
    std::map<std::size_t, SparseRow> reduced;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        SparseRow row = it->second;
        for (;;) {
            auto hit = std::find_if(row.begin() + 1, row.end(),
                                    [&](const auto& e) { return reduced.contains(e.first); });
            if (hit == row.end()) break;
            const mpz_class entry = hit->second;
            const SparseRow& pivot = reduced.at(hit->first);
            const mpz_class& lead = pivot.front().second;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), entry.get_mpz_t());
            row = combine(lead / g, row, entry / g, pivot);
            make_primitive(row);
        }
        reduced.emplace(it->first, std::move(row));
    }

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f : free_columns()) {
        std::vector<Rational> v(cols_);
        v[f] = Rational(1);
        for (const auto& [lead_col, row] : reduced) {
            if (lead_col > f) continue;
            const auto hit = std::lower_bound(row.begin(), row.end(), f,
                                              [](const auto& e, std::size_t c) { return e.first < c; });
            if (hit != row.end() && hit->first == f) {
                v[lead_col] = -Rational(mpq_class(hit->second, row.front().second));
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace dspace
