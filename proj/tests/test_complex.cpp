#include <gtest/gtest.h>

#include <algorithm>

#include "levelkit/complex.hpp"
#include "levelkit/error.hpp"
#include "levelkit/levelability.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace levelkit {
namespace {

SimplicialComplex make(std::size_t n, std::vector<VertexMask> faces) {
  return new_from_faces(VertexSet::numbered(n), faces);
}

std::vector<VertexMask> facets_of(const SimplicialComplex& c) { return {c.facets().begin(), c.facets().end()}; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::ParseError;
}

TEST(VertexMask, LexOrderComparesSortedMemberLists) {
  EXPECT_TRUE(lex_less({0, 1}, {0, 1, 2}));
  EXPECT_TRUE(lex_less({0, 1, 2}, {0, 2}));
  EXPECT_TRUE(lex_less({0, 2}, {1}));
  EXPECT_FALSE(lex_less({1}, {1}));
  EXPECT_TRUE(lex_less(VertexMask{}, {0}));
  EXPECT_TRUE(graded_less({2}, {0, 1}));
}

TEST(NewFromFaces, AbsorbsNonMaximalFaces) {
  auto c = make(3, {{0, 1}, {1, 2}, {1}});
  EXPECT_EQ(facets_of(c), (std::vector<VertexMask>{{0, 1}, {1, 2}}));
}

TEST(NewFromFaces, KeepsIncomparableFacetsInCanonicalOrder) {
  auto c = make(5, {{0, 2, 4}, {1, 3}, {0, 3}, {1, 4}});
  EXPECT_EQ(facets_of(c), (std::vector<VertexMask>{{0, 2, 4}, {0, 3}, {1, 3}, {1, 4}}));
}

TEST(NewFromFaces, DeduplicatesFaces) {
  auto c = make(2, {{0, 1}, {0, 1}, {0}});
  EXPECT_EQ(c.num_facets(), 1u);
}

TEST(NewFromFaces, Errors) {
  EXPECT_EQ(kind_of([] { make(2, {}); }), ErrorKind::EmptyComplex);
  EXPECT_EQ(kind_of([] { make(2, {{0, 2}}); }), ErrorKind::UnknownVertex);
  EXPECT_EQ(kind_of([] { make(3, {{0, 1}}); }), ErrorKind::UncoveredVertex);
  EXPECT_EQ(kind_of([] { VertexSet({"a", "a"}); }), ErrorKind::DuplicateVertex);
  EXPECT_EQ(kind_of([] { VertexSet::numbered(65); }), ErrorKind::TooManyVertices);
}

TEST(IsFace, Examples) {
  auto c = make(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(is_face(c, {0, 2}));
  EXPECT_TRUE(is_face(c, VertexMask{}));
  EXPECT_TRUE(is_face(c, {1, 2}));
}

TEST(Faces, Examples) {
  EXPECT_EQ(faces(make(2, {{0, 1}})), (std::vector<VertexMask>{VertexMask{}, {0}, {1}, {0, 1}}));
  EXPECT_EQ(faces(make(3, {{0, 1}, {1, 2}})),
            (std::vector<VertexMask>{VertexMask{}, {0}, {1}, {2}, {0, 1}, {1, 2}}));
}

TEST(Faces, NonlevelableFamilyFiveMatchesSubsetScan) {
  auto c = nonlevelable_family(5);
  const auto oracle = testing::faces_by_scan(5, c.facets());
  EXPECT_EQ(oracle.size(), 13u);
  EXPECT_EQ(faces(c).size(), oracle.size());
}

TEST(IsPure, Examples) {
  EXPECT_TRUE(is_pure(make(3, {{0, 1}, {1, 2}})));
  EXPECT_FALSE(is_pure(make(4, {{0, 1, 2}, {2, 3}})));
  EXPECT_TRUE(is_pure(make(3, {{0, 1, 2}})));
}

TEST(IsLeaf, Examples) {
  auto c = make(4, {{0, 1, 2}, {2, 3}});
  auto lc = is_leaf(c, {2, 3});
  EXPECT_TRUE(lc.is_leaf);
  ASSERT_TRUE(lc.witness);
  EXPECT_EQ(*lc.witness, VertexMask({0, 1, 2}));

  EXPECT_FALSE(is_leaf(nonlevelable_family(5), {0, 2, 4}).is_leaf);

  auto single = make(2, {{0, 1}});
  EXPECT_TRUE(is_leaf(single, {0, 1}).is_leaf);
  EXPECT_FALSE(is_leaf(single, {0, 1}).witness);

  EXPECT_EQ(kind_of([&] { is_leaf(c, {0, 1}); }), ErrorKind::NotAFacet);
}

TEST(IsLeaf, ReportsFirstWitness) {
  // Facet {x4} meets nothing, so every other facet is a witness.
  auto c = make(4, {{0, 1}, {1, 2}, {3}});
  auto lc = is_leaf(c, {3});
  ASSERT_TRUE(lc.is_leaf);
  EXPECT_EQ(*lc.witness, VertexMask({0, 1}));
}

TEST(IsForest, Examples) {
  EXPECT_TRUE(is_forest(make(4, {{0, 1, 2}, {2, 3}})));
  EXPECT_FALSE(is_forest(nonlevelable_family(5)));
  EXPECT_TRUE(is_forest(make(4, {{0, 1}, {2, 3}})));
}

TEST(IsForest, CycleOfEdgesIsNotAForest) {
  // Boundary of a triangle: no edge meets the others inside a single one.
  EXPECT_FALSE(is_forest(make(3, {{0, 1}, {1, 2}, {0, 2}})));
  EXPECT_TRUE(is_forest(make(4, {{0, 1}, {1, 2}, {2, 3}})));
}

TEST(IsForest, FacetCap) {
  std::vector<VertexMask> faces;
  for (std::size_t i = 0; i < 21; ++i) faces.push_back(VertexMask{}.with(i));
  auto c = make(21, faces);
  EXPECT_EQ(kind_of([&] { is_forest(c); }), ErrorKind::TooManyFacets);
  EXPECT_TRUE(is_forest(c, 21));
}

TEST(IsForest, NonlevelableFamiliesAreNotForests) {
  for (std::size_t n : {5u, 7u, 9u}) EXPECT_FALSE(is_forest(nonlevelable_family(n))) << n;
}

TEST(Restrict, Examples) {
  auto c = make(3, {{0, 1}, {1, 2}});
  auto r = restrict_to(c, {0, 2});
  EXPECT_EQ(r.vertices().labels(), (std::vector<std::string>{"x1", "x3"}));
  EXPECT_EQ(facets_of(r), (std::vector<VertexMask>{{0}, {1}}));

  auto d = make(4, {{0, 1, 2}, {2, 3}});
  auto rd = restrict_to(d, {0, 1, 2});
  EXPECT_EQ(facets_of(rd), (std::vector<VertexMask>{{0, 1, 2}}));

  auto e = make(2, {{0, 1}});
  EXPECT_EQ(restrict_to(e, {0, 1}), e);

  EXPECT_EQ(kind_of([&] { restrict_to(c, VertexMask{}); }), ErrorKind::EmptyComplex);
}

TEST(IndependenceComplex, Examples) {
  Graph path(VertexSet::numbered(3), {{0, 1}, {1, 2}});
  EXPECT_EQ(facets_of(independence_complex(path)), (std::vector<VertexMask>{{0, 2}, {1}}));

  Graph triangle(VertexSet::numbered(3), {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(facets_of(independence_complex(triangle)), (std::vector<VertexMask>{{0}, {1}, {2}}));

  Graph empty(VertexSet::numbered(3), {});
  EXPECT_EQ(facets_of(independence_complex(empty)), (std::vector<VertexMask>{{0, 1, 2}}));
}

TEST(Graph, RejectsLoopsAndCollapsesDuplicates) {
  EXPECT_EQ(kind_of([] { Graph(VertexSet::numbered(2), {{1, 1}}); }), ErrorKind::InvalidGraph);
  Graph g(VertexSet::numbered(2), {{0, 1}, {1, 0}});
  EXPECT_EQ(g.edges().size(), 1u);
}

// ---- properties ----

class ComplexProperties : public ::testing::Test {
 protected:
  testing::Rng rng{20240611};
};

TEST_F(ComplexProperties, FacetsAreMaximal) {
  for (int iter = 0; iter < 300; ++iter) {
    auto c = testing::random_complex(rng, 1 + iter % 7, 6, false);
    auto f = c.facets();
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (i != j) EXPECT_FALSE(f[i].subset_of(f[j]));
      }
    }
    EXPECT_TRUE(std::is_sorted(f.begin(), f.end(), lex_less));
  }
}

TEST_F(ComplexProperties, FacesMatchMembershipExhaustively) {
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + iter % 6;
    auto c = testing::random_complex(rng, n, 5, false);
    const auto listed = faces(c);
    for (VertexMask w : listed) {
      for (std::size_t i : w.indices()) {
        EXPECT_TRUE(std::find(listed.begin(), listed.end(), w.without(i)) != listed.end());
      }
    }
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      const bool in_list = std::find(listed.begin(), listed.end(), VertexMask(w)) != listed.end();
      EXPECT_EQ(is_face(c, VertexMask(w)), in_list);
    }
    const auto scanned = testing::faces_by_scan(n, c.facets());
    EXPECT_EQ(listed.size(), scanned.size());
  }
}

TEST_F(ComplexProperties, RestrictComposes) {
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 2 + iter % 5;
    auto c = testing::random_complex(rng, n, 5, false);
    EXPECT_EQ(restrict_to(c, c.vertices().all()), c);

    VertexMask k1 = testing::random_subset(rng, n, 1, n);
    VertexMask k2;
    for (std::size_t i : k1.indices()) {
      if (rng() % 2 == 0) k2 = k2.with(i);
    }
    if (k2.empty()) k2 = k2.with(k1.min_index());
    auto r1 = restrict_to(c, k1);
    auto twice = restrict_to(r1, translate_mask(k2, c.vertices(), r1.vertices()));
    EXPECT_EQ(twice, restrict_to(c, k1 & k2));
  }
}

TEST_F(ComplexProperties, IndependenceComplexFacesAreIndependentSets) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> all_pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
    }
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << all_pairs.size()); ++pick) {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t k = 0; k < all_pairs.size(); ++k) {
        if ((pick >> k) & 1u) edges.push_back(all_pairs[k]);
      }
      Graph g(VertexSet::numbered(n), edges);
      auto delta = independence_complex(g);
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
        bool independent = std::none_of(edges.begin(), edges.end(), [w](auto e) {
          return ((w >> e.first) & 1u) && ((w >> e.second) & 1u);
        });
        ASSERT_EQ(is_face(delta, VertexMask(w)), independent);
      }
    }
  }
}

TEST_F(ComplexProperties, SingleOrDisjointFacetsAreForests) {
  for (int iter = 0; iter < 50; ++iter) {
    EXPECT_TRUE(is_forest(testing::random_disjoint(rng, 1 + iter % 6, 1)));
  }
  EXPECT_TRUE(is_forest(make(5, {{0, 1, 2, 3, 4}})));
}

TEST_F(ComplexProperties, ForestLeavesHaveAFreeVertex) {
  for (int iter = 0; iter < 100; ++iter) {
    auto c = testing::random_forest(rng, 2 + iter % 5);
    for (Facet f : c.facets()) {
      if (!is_leaf(c, f).is_leaf) continue;
      VertexMask others;
      for (Facet g : c.facets()) {
        if (g != f) others = others | g;
      }
      EXPECT_FALSE((f - others).empty());
    }
  }
}

}  // namespace
}  // namespace levelkit
