#include "dspace/json_io.hpp"

#include <algorithm>
#include <charconv>

namespace dspace {

namespace {

Rational entry_value(const Json& e) {
    if (e.is_string()) {
        try {
            return Rational::parse(e.get<std::string>());
        } catch (const std::invalid_argument& ex) {
            throw InputError(std::string("matrix entry: ") + ex.what());
        }
    }
    if (e.is_number_integer()) return Rational(e.get<long>());
    throw InputError("matrix entries must be rational strings or integers");
}

Json rational_list(const RationalVector& v) {
    Json out = Json::array();
    for (const Rational& r : v) out.push_back(r.str());
    return out;
}

}  // namespace

QMatrix parse_matrix_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed matrix JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows")) {
        throw InputError("matrix JSON needs the keys \"n\" and \"rows\"");
    }
    if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 1) throw InputError("\"n\" must be a positive integer");
    const auto n = static_cast<std::size_t>(doc["n"].get<long>());
    const Json& rows = doc["rows"];
    if (!rows.is_array() || rows.size() != n) throw InputError("\"rows\" must hold n rows");
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) throw InputError("every row must hold n entries");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = entry_value(rows[i][j]);
    }
    return m;
}

Json matrix_json(const QMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto r = m.row(i);
        rows.push_back(rational_list(RationalVector(r.begin(), r.end())));
    }
    return Json{{"n", m.rows()}, {"rows", rows}};
}

Subset parse_subset(std::string_view text, std::size_t n) {
    Subset out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        std::size_t value = 0;
        const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || value < 1 || value > n) {
            throw InputError("subset entries must be integers between 1 and " + std::to_string(n));
        }
        out.push_back(value - 1);
        pos = static_cast<std::size_t>(end - text.data());
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos < text.size()) {
            if (text[pos] != ',') throw InputError("subset must be a comma-separated list");
            ++pos;
            if (pos == text.size()) throw InputError("subset ends with a comma");
        }
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw InputError("subset has repeated indices");
    return out;
}

std::string subset_key(const Subset& s) {
    std::string out = "[";
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(s[k] + 1);
    }
    return out + "]";
}

Json subset_json(const Subset& s) {
    Json out = Json::array();
    for (std::size_t j : s) out.push_back(j + 1);
    return out;
}

Json minors_json(const QMatrix& m) {
    Json list = Json::array();
    for (const Subset& s : nonempty_subsets(m.rows())) {
        list.push_back(Json{{"subset", subset_json(s)}, {"minor", principal_minor(m, s).str()}});
    }
    const MinorsVerdict verdict = all_principal_minors_nonzero(m);
    return Json{{"n", m.rows()},
                {"minors", list},
                {"all_nonzero", verdict.all_nonzero},
                {"witness", verdict.witness ? subset_json(*verdict.witness) : Json(nullptr)}};
}

Json hilbert_json(const HilbertReport& report) {
    return Json{{"dmax", report.dmax},
                {"dims_primal", report.dims_primal},
                {"dims_dual", report.dims_dual},
                {"binomial_profile", report.binomial_profile},
                {"minors_nonzero", report.minors_nonzero},
                {"witness", report.witness ? subset_json(*report.witness) : Json(nullptr)}};
}

Json basis_json(const GradedBasis& basis) {
    Json pieces = Json::array();
    for (unsigned d = 0; d <= basis.dmax(); ++d) {
        Json elements = Json::array();
        for (const MPoly& p : basis.piece(d).elements) elements.push_back(render(p));
        pieces.push_back(Json{{"degree", d}, {"dim", elements.size()}, {"elements", elements}});
    }
    return Json{{"dmax", basis.dmax()}, {"dims", basis.dims()}, {"total_dim", basis.total_dim()}, {"pieces", pieces}};
}

Json orbit_json(const OrbitSet& orbit) {
    Json points = Json::array();
    for (const WeightVector& p : orbit.points) points.push_back(rational_list(p));
    return Json{{"size", orbit.size()}, {"points", points}};
}

Json coefficients_json(const MPoly& p) {
    Json out = Json::object();
    for (const auto& [m, c] : p.terms()) out[render_monomial(m)] = c.str();
    return out;
}

Json volume_json(const MPoly& v, const std::string& type, Normalization normalization, RootConvention convention) {
    return Json{{"type", type},
                {"normalization", to_string(normalization)},
                {"convention", to_string(convention)},
                {"degree", v.degree().value_or(0)},
                {"coefficients", coefficients_json(v)},
                {"polynomial", render(v)}};
}

Json certificate_json(const GeometricityCertificate& cert) {
    Json coefficients = Json::object();
    for (const auto& [s, mu] : cert.coefficients) coefficients[subset_key(s)] = mu.str();
    Json out{{"status", to_string(cert.status)}, {"coefficients", coefficients}};
    out["witness"] = cert.witness ? Json{{"i", cert.witness->index + 1}, {"offending", render(cert.witness->offending)}}
                                  : Json(nullptr);
    if (cert.residual) out["residual"] = render(*cert.residual);
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dspace
