#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "levelkit/complex.hpp"

namespace levelkit {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent vector over the vertex set. `dual` marks inverse-system monomials
/// written in the variables y_i rather than x_i.
struct Monomial {
  std::vector<std::int64_t> exponents;
  bool dual = false;

  std::int64_t degree() const;
  VertexMask support() const;
  bool divides(const Monomial& other) const;
  /// x^e * x_i.
  Monomial times_variable(std::size_t i) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Support order (lex_less on supports), then exponent vectors.
bool canonical_less(const Monomial& a, const Monomial& b);

/// Renders as "x1^2*x3" using the given labels; the constant monomial prints "1".
std::string to_string(const Monomial& m, const VertexSet& labels);

/// Tuple (a_1, ..., a_n) with every a_i >= 2.
class ExponentTuple {
 public:
  /// Throws BadExponent if some entry is below 2.
  explicit ExponentTuple(std::vector<std::int64_t> values);
  static ExponentTuple constant(std::size_t n, std::int64_t value);

  std::size_t size() const { return values_.size(); }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  const std::vector<std::int64_t>& values() const { return values_; }
  /// b_i = a_i - 1.
  std::vector<std::int64_t> shifted() const;

  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// Monomial ideal kept as a minimal generating set. Redundant generators are
/// dropped on construction; survivors keep their first-occurrence order.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t num_variables, std::vector<Monomial> generators);

  std::size_t num_variables() const { return num_variables_; }
  const std::vector<Monomial>& generators() const { return generators_; }

 private:
  std::size_t num_variables_;
  std::vector<Monomial> generators_;
};

/// Divisibility membership. Throws VariableCountMismatch on a length mismatch.
bool contains(const MonomialIdeal& ideal, const Monomial& m);

/// Generated by the minimal non-faces, smallest first.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c);

/// (I_Δ, x_1^{a_1}, ..., x_n^{a_n}).
MonomialIdeal artinian_ideal(const SimplicialComplex& c, const ExponentTuple& a);

/// Output of the a_i = 1 reduction.
struct Normalized {
  SimplicialComplex complex;
  ExponentTuple exponents;
  /// Labels of the removed vertices, in original order.
  std::vector<std::string> removed;
};

/// Deletes each vertex with a_i = 1 (restricting the complex) and its entry.
Normalized normalize(const SimplicialComplex& c, std::span<const std::int64_t> a);

/// Guard on socle and h-vector degrees; larger tuples are rejected with DegreeTooLarge.
inline constexpr std::int64_t kMaxDegree = std::int64_t{1} << 24;

struct HVector {
  std::vector<BigInt> h;
  std::size_t socle_degree() const { return h.size() - 1; }
};

/// Dimension of each graded piece of A(Δ, a), from the face-wise generating
/// function Σ_F Π_{i∈F} (t + ... + t^{a_i - 1}).
HVector hilbert_vector(const SimplicialComplex& c, const ExponentTuple& a);

struct SocleVector {
  std::vector<std::int64_t> s;

  std::size_t socle_degree() const { return s.size() - 1; }
  std::int64_t type() const;
  /// All socle in the top degree.
  bool is_level() const;
};

/// Dual monomials Π_{i∈F} y_i^{a_i - 1}, one per facet in facet order.
std::vector<Monomial> inverse_system_generators(const SimplicialComplex& c, const ExponentTuple& a);

/// s_j = number of facets of weight Σ_{i∈F}(a_i - 1) equal to j.
SocleVector socle_vector(const SimplicialComplex& c, const ExponentTuple& a);

inline constexpr std::uint64_t kDefaultBoxCap = 1'000'000;

/// Socle monomials found from the definition: m outside I with m*x_i in I for
/// every i, scanning the box Π [0, a_i - 1]. Throws BoxTooLarge past `box_cap`.
std::vector<Monomial> socle_bruteforce(const SimplicialComplex& c, const ExponentTuple& a,
                                       std::uint64_t box_cap = kDefaultBoxCap);

/// Cohen-Macaulay type; equals the facet count whatever the exponents.
std::int64_t cm_type(const SimplicialComplex& c);
bool is_gorenstein(const SimplicialComplex& c);

struct BettiShift {
  std::int64_t shift = 0;
  std::int64_t multiplicity = 0;
  friend bool operator==(const BettiShift&, const BettiShift&) = default;
};

/// Last module of the minimal free resolution of R/(I(G), x_1^2, ..., x_n^2).
struct BettiTail {
  std::vector<BettiShift> pairs;
  std::int64_t total() const;
};

BettiTail betti_tail(const Graph& g);

}  // namespace levelkit
