#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace levelkit {

/// Maximum number of vertices a complex or graph may carry.
inline constexpr std::size_t kMaxVertices = 64;

/// A subset of vertex indices, stored as a 64-bit mask. Index 0 is the first
/// vertex of the owning VertexSet (label x1 in the usual naming).
class VertexMask {
 public:
  constexpr VertexMask() = default;
  constexpr explicit VertexMask(std::uint64_t bits) : bits_(bits) {}
  VertexMask(std::initializer_list<std::size_t> indices);

  static VertexMask from_indices(std::span<const std::size_t> indices);
  /// The mask {0, ..., count-1}.
  static constexpr VertexMask first(std::size_t count) {
    return VertexMask(count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return i < 64 && ((bits_ >> i) & 1u) != 0; }
  constexpr bool subset_of(VertexMask other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexMask other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexMask with(std::size_t i) const { return VertexMask(bits_ | (std::uint64_t{1} << i)); }
  constexpr VertexMask without(std::size_t i) const { return VertexMask(bits_ & ~(std::uint64_t{1} << i)); }

  /// Member indices in increasing order.
  std::vector<std::size_t> indices() const;
  /// Largest member index; mask must be non-empty.
  std::size_t max_index() const { return 63 - static_cast<std::size_t>(std::countl_zero(bits_)); }
  std::size_t min_index() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  friend constexpr VertexMask operator&(VertexMask a, VertexMask b) { return VertexMask(a.bits_ & b.bits_); }
  friend constexpr VertexMask operator|(VertexMask a, VertexMask b) { return VertexMask(a.bits_ | b.bits_); }
  friend constexpr VertexMask operator-(VertexMask a, VertexMask b) { return VertexMask(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexMask, VertexMask) = default;

 private:
  std::uint64_t bits_ = 0;
};

using Facet = VertexMask;

/// Lexicographic comparison of the sorted member index lists; {0,1} < {0,1,2} < {0,2} < {1}.
bool lex_less(VertexMask a, VertexMask b);
/// Size first, then lex_less. Used for face enumeration order.
bool graded_less(VertexMask a, VertexMask b);

/// Ordered list of distinct vertex labels.
class VertexSet {
 public:
  explicit VertexSet(std::vector<std::string> labels);
  /// Labels x1, ..., xn.
  static VertexSet numbered(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  VertexMask all() const { return VertexMask::first(size()); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A non-empty simplicial complex stored by its facets (pairwise incomparable,
/// sorted by lex_less). Immutable after construction.
class SimplicialComplex {
 public:
  const VertexSet& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::span<const Facet> facets() const { return facets_; }
  std::size_t num_facets() const { return facets_.size(); }
  std::optional<std::size_t> facet_position(VertexMask f) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  friend SimplicialComplex new_from_faces(VertexSet, std::span<const VertexMask>);
  SimplicialComplex(VertexSet vertices, std::vector<Facet> facets)
      : vertices_(std::move(vertices)), facets_(std::move(facets)) {}

  VertexSet vertices_;
  std::vector<Facet> facets_;
};

/// Builds the complex generated by `faces`: keeps the inclusion-maximal ones,
/// deduplicated and sorted. Every vertex must lie in some face.
SimplicialComplex new_from_faces(VertexSet vertices, std::span<const VertexMask> faces);

bool is_face(const SimplicialComplex& c, VertexMask w);

/// All faces including the empty one, sorted by graded_less.
std::vector<VertexMask> faces(const SimplicialComplex& c);

bool is_pure(const SimplicialComplex& c);

/// `f` is a leaf when it is the only facet, or some other facet G satisfies
/// G' ∩ f ⊆ G ∩ f for every facet G' ≠ f. `witness` is the first such G in
/// collection order (absent for a lone facet).
struct LeafCheck {
  bool is_leaf = false;
  std::optional<Facet> witness;
};

/// Throws NotAFacet when `f` is not a facet of `c`.
LeafCheck is_leaf(const SimplicialComplex& c, Facet f);

/// Leaf test inside an arbitrary facet collection; `f` must be one of `collection`.
LeafCheck leaf_in_collection(std::span<const Facet> collection, Facet f);

inline constexpr std::size_t kDefaultForestFacetCap = 20;

/// Checks every non-empty sub-collection of facets for a leaf.
/// Throws TooManyFacets when the complex has more than `facet_cap` facets.
bool is_forest(const SimplicialComplex& c, std::size_t facet_cap = kDefaultForestFacetCap);

/// The complex on `keep` (re-indexed in the original vertex order) whose faces
/// are the faces of `c` contained in `keep`.
SimplicialComplex restrict_to(const SimplicialComplex& c, VertexMask keep);

/// Rewrites a mask over `from` into the indices of `to`, matching by label.
/// Throws UnknownVertex when a label is missing from `to`.
VertexMask translate_mask(VertexMask m, const VertexSet& from, const VertexSet& to);

/// Simple undirected graph; edges stored as sorted (i < j) pairs without duplicates.
class Graph {
 public:
  Graph(VertexSet vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

  const VertexSet& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  /// Neighbourhood masks indexed by vertex.
  const std::vector<VertexMask>& adjacency() const { return adjacency_; }

 private:
  VertexSet vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<VertexMask> adjacency_;
};

/// Complex of independent sets; its facets are the maximal independent sets.
SimplicialComplex independence_complex(const Graph& g);

}  // namespace levelkit
