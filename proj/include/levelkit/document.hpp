#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "levelkit/complex.hpp"
#include "levelkit/monomial.hpp"

namespace levelkit {

/// {"vertices": [...], "facets": [[...], ...], "exponents": [...]?}
struct ComplexDocument {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> facets;
  std::optional<std::vector<std::int64_t>> exponents;
};

/// {"vertices": [...], "edges": [[u, v], ...]}
struct GraphDocument {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Both parsers throw Error(ParseError) naming the line and column of malformed
/// JSON, or the offending field path (e.g. "facets[2][0]") for schema problems.
ComplexDocument parse_complex_document(std::string_view text);
GraphDocument parse_graph_document(std::string_view text);

SimplicialComplex to_complex(const ComplexDocument& doc);
Graph to_graph(const GraphDocument& doc);

ComplexDocument to_document(const SimplicialComplex& c);
nlohmann::json to_json(const ComplexDocument& doc);

/// Facets as label lists, in facet order.
nlohmann::json facets_json(const SimplicialComplex& c);
/// Monomial as {label: exponent} over its support.
nlohmann::json monomial_json(const Monomial& m, const VertexSet& labels);
/// JSON number when it fits in 64 bits, decimal string otherwise.
nlohmann::json bigint_json(const BigInt& v);

/// Serialised form written by the CLI: two-space indentation, sorted keys,
/// trailing newline.
std::string render(const nlohmann::json& j);

}  // namespace levelkit
