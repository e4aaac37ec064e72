#include "levelkit/document.hpp"

#include <algorithm>
#include <limits>

#include "levelkit/error.hpp"

namespace levelkit {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, "field '" + path + "': " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based; translate it to a line and column.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::ParseError, "malformed JSON at line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": " + e.what());
  }
}

const json& require(const json& root, const char* key) {
  if (!root.is_object()) field_error("$", "expected a JSON object");
  auto it = root.find(key);
  if (it == root.end()) field_error(key, "missing");
  return *it;
}

std::string label_at(const json& j, const std::string& path) {
  if (!j.is_string()) field_error(path, "expected a vertex label string");
  return j.get<std::string>();
}

std::vector<std::string> parse_vertices(const json& root) {
  const json& v = require(root, "vertices");
  if (!v.is_array()) field_error("vertices", "expected an array");
  if (v.empty()) field_error("vertices", "at least one vertex is required");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string path = "vertices[" + std::to_string(i) + "]";
    std::string label = label_at(v[i], path);
    if (std::find(out.begin(), out.end(), label) != out.end()) {
      field_error(path, "duplicate label '" + label + "'");
    }
    out.push_back(std::move(label));
  }
  if (out.size() > kMaxVertices) field_error("vertices", "more than 64 vertices");
  return out;
}

void require_declared(const std::vector<std::string>& vertices, const std::string& label,
                      const std::string& path) {
  if (std::find(vertices.begin(), vertices.end(), label) == vertices.end()) {
    field_error(path, "unknown vertex label '" + label + "'");
  }
}

}  // namespace

ComplexDocument parse_complex_document(std::string_view text) {
  const json root = parse_json(text);
  ComplexDocument doc;
  doc.vertices = parse_vertices(root);

  const json& facets = require(root, "facets");
  if (!facets.is_array()) field_error("facets", "expected an array of label arrays");
  for (std::size_t k = 0; k < facets.size(); ++k) {
    const std::string fpath = "facets[" + std::to_string(k) + "]";
    if (!facets[k].is_array()) field_error(fpath, "expected an array of labels");
    std::vector<std::string> facet;
    for (std::size_t i = 0; i < facets[k].size(); ++i) {
      const std::string path = fpath + "[" + std::to_string(i) + "]";
      std::string label = label_at(facets[k][i], path);
      require_declared(doc.vertices, label, path);
      facet.push_back(std::move(label));
    }
    doc.facets.push_back(std::move(facet));
  }

  if (auto it = root.find("exponents"); it != root.end()) {
    if (!it->is_array()) field_error("exponents", "expected an array of integers");
    if (it->size() != doc.vertices.size()) {
      field_error("exponents", "has " + std::to_string(it->size()) + " entries for " +
                                   std::to_string(doc.vertices.size()) + " vertices");
    }
    std::vector<std::int64_t> exps;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& e = (*it)[i];
      if (!e.is_number_integer()) field_error("exponents[" + std::to_string(i) + "]", "expected an integer");
      exps.push_back(e.get<std::int64_t>());
    }
    doc.exponents = std::move(exps);
  }
  return doc;
}

GraphDocument parse_graph_document(std::string_view text) {
  const json root = parse_json(text);
  GraphDocument doc;
  doc.vertices = parse_vertices(root);
  const json& edges = require(root, "edges");
  if (!edges.is_array()) field_error("edges", "expected an array of label pairs");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string epath = "edges[" + std::to_string(k) + "]";
    if (!edges[k].is_array() || edges[k].size() != 2) field_error(epath, "expected exactly two labels");
    std::string u = label_at(edges[k][0], epath + "[0]");
    std::string v = label_at(edges[k][1], epath + "[1]");
    require_declared(doc.vertices, u, epath + "[0]");
    require_declared(doc.vertices, v, epath + "[1]");
    if (u == v) field_error(epath, "loop at '" + u + "'");
    doc.edges.emplace_back(std::move(u), std::move(v));
  }
  return doc;
}

SimplicialComplex to_complex(const ComplexDocument& doc) {
  VertexSet vs(doc.vertices);
  std::vector<VertexMask> faces;
  for (const auto& facet : doc.facets) {
    VertexMask m;
    for (const auto& label : facet) {
      auto i = vs.index_of(label);
      if (!i) throw Error(ErrorKind::UnknownVertex, "unknown vertex label '" + label + "'");
      m = m.with(*i);
    }
    faces.push_back(m);
  }
  return new_from_faces(std::move(vs), faces);
}

Graph to_graph(const GraphDocument& doc) {
  VertexSet vs(doc.vertices);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [u, v] : doc.edges) {
    auto i = vs.index_of(u);
    auto j = vs.index_of(v);
    if (!i || !j) throw Error(ErrorKind::UnknownVertex, "edge uses an undeclared vertex");
    edges.emplace_back(*i, *j);
  }
  return Graph(std::move(vs), std::move(edges));
}

ComplexDocument to_document(const SimplicialComplex& c) {
  ComplexDocument doc;
  doc.vertices = c.vertices().labels();
  for (Facet f : c.facets()) {
    std::vector<std::string> labels;
    for (std::size_t i : f.indices()) labels.push_back(c.vertices().label(i));
    doc.facets.push_back(std::move(labels));
  }
  return doc;
}

json to_json(const ComplexDocument& doc) {
  json j;
  j["vertices"] = doc.vertices;
  j["facets"] = doc.facets;
  if (doc.exponents) j["exponents"] = *doc.exponents;
  return j;
}

json facets_json(const SimplicialComplex& c) { return to_json(to_document(c))["facets"]; }

json monomial_json(const Monomial& m, const VertexSet& labels) {
  json j = json::object();
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] != 0) j[labels.label(i)] = m.exponents[i];
  }
  return j;
}

json bigint_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return static_cast<std::uint64_t>(v);
  }
  return v.str();
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

}  // namespace levelkit
