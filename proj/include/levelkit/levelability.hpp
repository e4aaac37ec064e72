#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levelkit/complex.hpp"
#include "levelkit/monomial.hpp"

namespace levelkit {

/// One equation per consecutive pair of facets (F_k, F_{k+1}):
///   Σ_{i∈F_k} a_i − Σ_{i∈F_{k+1}} a_i = |F_k| − |F_{k+1}|.
/// Vertices in both facets cancel and get coefficient 0.
struct LinearSystem {
  struct Row {
    std::vector<std::int64_t> coeffs;
    std::int64_t rhs = 0;
    friend bool operator==(const Row&, const Row&) = default;
  };
  std::vector<Row> rows;
};

/// Throws SingleFacet for t = 1 and SingletonFacet if some facet has one vertex.
LinearSystem build_system(const SimplicialComplex& c);

enum class Verdict { Levelable, NotLevelable, TriviallyGorenstein };

std::string_view to_string(Verdict v) noexcept;

struct LevelDecision {
  Verdict verdict = Verdict::NotLevelable;
  std::optional<ExponentTuple> certificate;
  /// Vertices whose shifted exponent b_i = a_i − 1 must vanish in every
  /// non-negative solution. Non-empty exactly when NOT_LEVELABLE.
  std::vector<std::size_t> forced_zero;
  /// Readable row-reduced system in the shifted variables; set when NOT_LEVELABLE.
  std::string report;
};

/// Decides levelability exactly. With b_i = a_i − 1 the system says every facet
/// has the same b-weight, which is homogeneous in b, so a rational solution with
/// all b_i ≥ 1 scales to an integral certificate. Every LEVELABLE certificate is
/// checked with verify_certificate before returning.
LevelDecision decide_levelable(const SimplicialComplex& c);

/// True when all facets have the same weight Σ_{i∈F}(a_i − 1).
bool verify_certificate(const SimplicialComplex& c, const ExponentTuple& a);

/// (c(a_1 − 1) + 1, ..., c(a_n − 1) + 1).
ExponentTuple scale_tuple(const ExponentTuple& a, std::int64_t factor);

ExponentTuple level_tuple_pure(const SimplicialComplex& c, std::int64_t d = 2);

/// Certificate for pairwise disjoint facets, built facet by facet.
ExponentTuple level_tuple_disjoint(const SimplicialComplex& c);

/// Certificate for a simplicial forest by peeling leaves.
ExponentTuple level_tuple_forest(const SimplicialComplex& c);

/// Facets of the non-levelable complex on n ≥ 5 vertices, in display order
/// (not canonical order). Indices are 0-based.
std::vector<Facet> nonlevelable_family_facets(std::size_t n);

/// The same complex on labels x1..xn.
SimplicialComplex nonlevelable_family(std::size_t n);

}  // namespace levelkit
