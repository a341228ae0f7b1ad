#pragma once

#include <string>

#include <boost/rational.hpp>
#include <json.hpp>

#include "hgc/hypergraph.hpp"

namespace hgc {

using Json = nlohmann::json;

/// Exact rationals used for every fractional quantity in the library.
using Rational = boost::rational<std::int64_t>;

/// {"vertices": [...], "edges": [[...], ...]} in canonical order: vertices
/// sorted, each incidence sorted, edges sorted lexicographically with
/// parallel edges kept adjacent.
Json to_json(const Hypergraph& h);

/// Parses the interchange format. Structural problems raise ConstructionError;
/// nlohmann parse errors propagate unchanged.
Hypergraph hypergraph_from_json(const Json& j);

/// Compact canonical serialization (single line, no spaces).
std::string to_canonical_string(const Hypergraph& h);

/// Rationals serialize as {"num": n, "den": d} with d > 0.
Json to_json(const Rational& q);

std::string to_string(const Rational& q);

}  // namespace hgc
