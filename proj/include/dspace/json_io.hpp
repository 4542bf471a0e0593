#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dspace/geometricity.hpp"
#include "dspace/gradedspace.hpp"
#include "dspace/linalg.hpp"
#include "dspace/rootsys.hpp"
#include "dspace/volumes.hpp"

namespace dspace {

/// Insertion-ordered, so every document has a fixed key order.
using Json = nlohmann::ordered_json;

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// {"n": 3, "rows": [["1", "-2/3", "0"], ...]}; integer JSON numbers are
/// accepted as entries too.
QMatrix parse_matrix_json(std::string_view text);
Json matrix_json(const QMatrix& m);

/// "1,3" -> {0, 2}. Indices are 1-based, must be distinct and <= n.
/// The empty string is the empty subset.
Subset parse_subset(std::string_view text, std::size_t n);
/// {0, 2} -> "[1,3]"
std::string subset_key(const Subset& s);
Json subset_json(const Subset& s);

Json minors_json(const QMatrix& m);
Json hilbert_json(const HilbertReport& report);
Json basis_json(const GradedBasis& basis);
Json orbit_json(const OrbitSet& orbit);
/// {"<monomial>": "<rat>"} in term order.
Json coefficients_json(const MPoly& p);
Json volume_json(const MPoly& v, const std::string& type, Normalization normalization, RootConvention convention);
Json certificate_json(const GeometricityCertificate& cert);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace dspace
