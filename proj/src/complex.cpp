#include "levelkit/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "levelkit/error.hpp"

namespace levelkit {

VertexMask::VertexMask(std::initializer_list<std::size_t> indices) {
  for (std::size_t i : indices) {
    if (i >= kMaxVertices) throw Error(ErrorKind::TooManyVertices, "vertex index beyond 64");
    bits_ |= std::uint64_t{1} << i;
  }
}

VertexMask VertexMask::from_indices(std::span<const std::size_t> indices) {
  VertexMask m;
  for (std::size_t i : indices) {
    if (i >= kMaxVertices) throw Error(ErrorKind::TooManyVertices, "vertex index beyond 64");
    m = m.with(i);
  }
  return m;
}

std::vector<std::size_t> VertexMask::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

bool lex_less(VertexMask a, VertexMask b) {
  // Walk both sorted member lists in lockstep.
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    int i = std::countr_zero(x);
    int j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

bool graded_less(VertexMask a, VertexMask b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

VertexSet::VertexSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorKind::EmptyComplex, "vertex set must be non-empty");
  if (labels_.size() > kMaxVertices) {
    throw Error(ErrorKind::TooManyVertices,
                "at most " + std::to_string(kMaxVertices) + " vertices are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateVertex, "duplicate vertex label '" + l + "'");
  }
}

VertexSet VertexSet::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return VertexSet(std::move(labels));
}

std::optional<std::size_t> VertexSet::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<std::size_t> SimplicialComplex::facet_position(VertexMask f) const {
  auto it = std::find(facets_.begin(), facets_.end(), f);
  if (it == facets_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - facets_.begin());
}

namespace {

std::vector<Facet> maximal_sets(std::vector<VertexMask> sets) {
  std::sort(sets.begin(), sets.end(), lex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Facet> out;
  for (VertexMask s : sets) {
    bool dominated = std::any_of(sets.begin(), sets.end(),
                                 [s](VertexMask o) { return o != s && s.subset_of(o); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace

SimplicialComplex new_from_faces(VertexSet vertices, std::span<const VertexMask> faces) {
  if (faces.empty()) throw Error(ErrorKind::EmptyComplex, "a complex needs at least one face");
  const VertexMask all = vertices.all();
  VertexMask covered;
  std::vector<VertexMask> nonempty;
  for (VertexMask f : faces) {
    if (!f.subset_of(all)) throw Error(ErrorKind::UnknownVertex, "face uses a vertex index out of range");
    covered = covered | f;
    if (!f.empty()) nonempty.push_back(f);
  }
  if (covered != all) {
    std::size_t missing = (all - covered).min_index();
    throw Error(ErrorKind::UncoveredVertex, "vertex '" + vertices.label(missing) + "' lies in no face");
  }
  return SimplicialComplex(std::move(vertices), maximal_sets(std::move(nonempty)));
}

bool is_face(const SimplicialComplex& c, VertexMask w) {
  return std::any_of(c.facets().begin(), c.facets().end(), [w](Facet f) { return w.subset_of(f); });
}

std::vector<VertexMask> faces(const SimplicialComplex& c) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<VertexMask> out;
  for (Facet f : c.facets()) {
    // Enumerate submasks of f, including f and the empty set.
    const std::uint64_t full = f.bits();
    std::uint64_t sub = full;
    while (true) {
      if (seen.insert(sub).second) out.emplace_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & full;
    }
  }
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

bool is_pure(const SimplicialComplex& c) {
  const std::size_t d = c.facets().front().size();
  return std::all_of(c.facets().begin(), c.facets().end(), [d](Facet f) { return f.size() == d; });
}

LeafCheck leaf_in_collection(std::span<const Facet> collection, Facet f) {
  if (collection.size() == 1) return {true, std::nullopt};
  // Every G' ∩ f lies in G ∩ f exactly when G ∩ f equals the union of all G' ∩ f.
  VertexMask reach;
  for (Facet g : collection) {
    if (g != f) reach = reach | (g & f);
  }
  for (Facet g : collection) {
    if (g != f && (g & f) == reach) return {true, g};
  }
  return {false, std::nullopt};
}

LeafCheck is_leaf(const SimplicialComplex& c, Facet f) {
  if (!c.facet_position(f)) throw Error(ErrorKind::NotAFacet, "the given set is not a facet");
  return leaf_in_collection(c.facets(), f);
}

bool is_forest(const SimplicialComplex& c, std::size_t facet_cap) {
  const std::size_t t = c.num_facets();
  if (t > facet_cap) {
    throw Error(ErrorKind::TooManyFacets, "forest test is exhaustive; " + std::to_string(t) +
                                              " facets exceed the cap of " + std::to_string(facet_cap));
  }
  auto all = c.facets();
  std::vector<Facet> sub;
  sub.reserve(t);
  for (std::uint64_t choice = 1; choice < (std::uint64_t{1} << t); ++choice) {
    sub.clear();
    for (std::size_t k = 0; k < t; ++k) {
      if ((choice >> k) & 1u) sub.push_back(all[k]);
    }
    bool has_leaf = std::any_of(sub.begin(), sub.end(),
                                [&sub](Facet f) { return leaf_in_collection(sub, f).is_leaf; });
    if (!has_leaf) return false;
  }
  return true;
}

namespace {

VertexMask reindex(VertexMask m, std::span<const std::size_t> new_index) {
  VertexMask out;
  for (std::size_t i : m.indices()) out = out.with(new_index[i]);
  return out;
}

}  // namespace

SimplicialComplex restrict_to(const SimplicialComplex& c, VertexMask keep) {
  keep = keep & c.vertices().all();
  if (keep.empty()) throw Error(ErrorKind::EmptyComplex, "restriction to an empty vertex set");
  std::vector<std::string> labels;
  std::vector<std::size_t> new_index(c.num_vertices(), 0);
  for (std::size_t i : keep.indices()) {
    new_index[i] = labels.size();
    labels.push_back(c.vertices().label(i));
  }
  std::vector<VertexMask> traces;
  for (Facet f : c.facets()) {
    VertexMask tr = f & keep;
    if (!tr.empty()) traces.push_back(reindex(tr, new_index));
  }
  return new_from_faces(VertexSet(std::move(labels)), traces);
}

VertexMask translate_mask(VertexMask m, const VertexSet& from, const VertexSet& to) {
  VertexMask out;
  for (std::size_t i : m.indices()) {
    auto j = to.index_of(from.label(i));
    if (!j) throw Error(ErrorKind::UnknownVertex, "label '" + from.label(i) + "' not present");
    out = out.with(*j);
  }
  return out;
}

Graph::Graph(VertexSet vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : vertices_(std::move(vertices)), adjacency_(vertices_.size()) {
  for (auto [i, j] : edges) {
    if (i >= vertices_.size() || j >= vertices_.size()) {
      throw Error(ErrorKind::UnknownVertex, "edge endpoint out of range");
    }
    if (i == j) throw Error(ErrorKind::InvalidGraph, "loop at vertex '" + vertices_.label(i) + "'");
    edges_.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [i, j] : edges_) {
    adjacency_[i] = adjacency_[i].with(j);
    adjacency_[j] = adjacency_[j].with(i);
  }
}

namespace {

// Branches on each vertex in index order: exclude it, or include it when it has
// no neighbour in the current set. Leaves of the search are exactly the
// independent sets; only the maximal ones are kept.
void collect_maximal_independent(const Graph& g, std::size_t next, VertexMask current,
                                 std::vector<VertexMask>& out) {
  const auto& adj = g.adjacency();
  if (next == g.num_vertices()) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      if (!current.contains(v) && !adj[v].intersects(current)) return;
    }
    out.push_back(current);
    return;
  }
  if (!adj[next].intersects(current)) collect_maximal_independent(g, next + 1, current.with(next), out);
  // Excluding `next` can only lead to a maximal set if some chosen or later vertex blocks it.
  VertexMask later = g.vertices().all() - VertexMask::first(next + 1);
  if (adj[next].intersects(current | later)) collect_maximal_independent(g, next + 1, current, out);
}

}  // namespace

SimplicialComplex independence_complex(const Graph& g) {
  std::vector<VertexMask> sets;
  collect_maximal_independent(g, 0, VertexMask{}, sets);
  return new_from_faces(g.vertices(), sets);
}

}  // namespace levelkit
