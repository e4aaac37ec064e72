#include "levelkit/levelability.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "levelkit/error.hpp"
#include "levelkit/rational_simplex.hpp"

namespace levelkit {

using lp::Rational;

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Levelable: return "LEVELABLE";
    case Verdict::NotLevelable: return "NOT_LEVELABLE";
    case Verdict::TriviallyGorenstein: return "TRIVIALLY_GORENSTEIN";
  }
  return "UNKNOWN";
}

namespace {

void reject_singleton_facets(const SimplicialComplex& c) {
  for (Facet f : c.facets()) {
    if (f.size() == 1) {
      throw Error(ErrorKind::SingletonFacet,
                  "facet {" + c.vertices().label(f.min_index()) +
                      "} has one vertex; drop singleton facets (normalize) before levelability");
    }
  }
}

std::int64_t to_exponent(const BigInt& shifted) {
  // a = b + 1 must fit.
  if (shifted >= BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw Error(ErrorKind::Overflow, "certificate entry does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(shifted) + 1;
}

ExponentTuple from_shifts(const std::vector<BigInt>& b) {
  std::vector<std::int64_t> a(b.size());
  std::transform(b.begin(), b.end(), a.begin(), to_exponent);
  return ExponentTuple(std::move(a));
}

BigInt ceil_div(const BigInt& num, const BigInt& den) { return (num + den - 1) / den; }

std::string format_row(const std::vector<Rational>& row, const VertexSet& labels) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    Rational coeff = row[j];
    if (first) {
      if (coeff < 0) out << "-";
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    if (coeff < 0) coeff = -coeff;
    if (coeff != 1) out << coeff << "*";
    out << "b[" << labels.label(j) << "]";
    first = false;
  }
  out << " = 0";
  return out.str();
}

}  // namespace

LinearSystem build_system(const SimplicialComplex& c) {
  if (c.num_facets() < 2) {
    throw Error(ErrorKind::SingleFacet, "a single facet is Gorenstein; no system to build");
  }
  reject_singleton_facets(c);
  const std::size_t n = c.num_vertices();
  auto facets = c.facets();
  LinearSystem sys;
  for (std::size_t k = 0; k + 1 < facets.size(); ++k) {
    LinearSystem::Row row{std::vector<std::int64_t>(n, 0), 0};
    for (std::size_t i = 0; i < n; ++i) {
      row.coeffs[i] = (facets[k].contains(i) ? 1 : 0) - (facets[k + 1].contains(i) ? 1 : 0);
    }
    row.rhs = static_cast<std::int64_t>(facets[k].size()) - static_cast<std::int64_t>(facets[k + 1].size());
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

bool verify_certificate(const SimplicialComplex& c, const ExponentTuple& a) {
  if (a.size() != c.num_vertices()) {
    throw Error(ErrorKind::VariableCountMismatch, "certificate length does not match the vertex count");
  }
  auto weight = [&a](Facet f) {
    BigInt w = 0;
    for (std::size_t i : f.indices()) w += a[i] - 1;
    return w;
  };
  const BigInt first = weight(c.facets().front());
  return std::all_of(c.facets().begin(), c.facets().end(), [&](Facet f) { return weight(f) == first; });
}

LevelDecision decide_levelable(const SimplicialComplex& c) {
  const std::size_t n = c.num_vertices();
  LevelDecision decision;
  if (c.num_facets() == 1) {
    decision.verdict = Verdict::TriviallyGorenstein;
    decision.certificate = ExponentTuple::constant(n, 2);
    return decision;
  }

  // Shifted form: Σ_{F_k} b − Σ_{F_{k+1}} b = 0 with b ≥ 1; the coefficients are
  // those of build_system.
  const LinearSystem sys = build_system(c);
  lp::Matrix a;
  for (const auto& row : sys.rows) a.emplace_back(row.coeffs.begin(), row.coeffs.end());
  const std::vector<Rational> zero_rhs(a.size(), 0);

  const lp::FeasibilityResult found = lp::find_feasible_point(a, zero_rhs, std::vector<Rational>(n, 1));
  if (found.feasible) {
    BigInt common_denominator = 1;
    for (const auto& v : found.point) {
      common_denominator = boost::multiprecision::lcm(common_denominator, denominator(v));
    }
    std::vector<BigInt> b(n);
    BigInt g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = numerator(found.point[i]) * (common_denominator / denominator(found.point[i]));
      g = boost::multiprecision::gcd(g, b[i]);
    }
    // Each b_i is a positive multiple of g, so dividing keeps b_i >= 1.
    for (auto& v : b) v /= g;
    decision.verdict = Verdict::Levelable;
    decision.certificate = from_shifts(b);
    if (!verify_certificate(c, *decision.certificate)) {
      throw std::logic_error("solver certificate failed verification");
    }
    return decision;
  }

  // The cone {A b = 0, b >= 0} meets b_i >= 1 (after scaling) unless b_i is forced to 0.
  decision.verdict = Verdict::NotLevelable;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> lower(n, 0);
    lower[i] = 1;
    if (!lp::find_feasible_point(a, zero_rhs, lower).feasible) decision.forced_zero.push_back(i);
  }
  if (decision.forced_zero.empty()) {
    throw std::logic_error("infeasible system without a forced variable");
  }

  std::ostringstream report;
  report << "no solution with every a_i >= 2; reduced system in b_i = a_i - 1:";
  for (const auto& row : lp::reduced_row_echelon(a).rows) report << "\n  " << format_row(row, c.vertices());
  report << "\nforced to b = 0 (a = 1) over all non-negative solutions:";
  for (std::size_t i : decision.forced_zero) report << " " << c.vertices().label(i);
  decision.report = report.str();
  return decision;
}

ExponentTuple scale_tuple(const ExponentTuple& a, std::int64_t factor) {
  if (factor < 1) throw Error(ErrorKind::BadExponent, "scaling factor must be positive");
  std::vector<BigInt> b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[i] = BigInt(factor) * (a[i] - 1);
  return from_shifts(b);
}

ExponentTuple level_tuple_pure(const SimplicialComplex& c, std::int64_t d) {
  if (d < 2) throw Error(ErrorKind::BadExponent, "constant exponent must be at least 2");
  if (!is_pure(c)) throw Error(ErrorKind::NotPure, "facets have different cardinalities");
  return ExponentTuple::constant(c.num_vertices(), d);
}

namespace {

// Shifted exponents b = a − 1 for facets[0..count); entries off their union stay 0.
std::vector<BigInt> disjoint_shifts(std::span<const Facet> facets, std::size_t n) {
  std::vector<BigInt> b(n, 0);
  if (facets.size() == 1) {
    for (std::size_t i : facets[0].indices()) b[i] = 1;
    return b;
  }
  if (facets.size() == 2) {
    const Facet f1 = facets[0];
    const Facet f2 = facets[1];
    for (std::size_t i : (f1 | f2).indices()) b[i] = 1;
    const auto d1 = static_cast<std::int64_t>(f1.size());
    const auto d2 = static_cast<std::int64_t>(f2.size());
    // Smallest a >= 2 with d2 − d1 + a >= 2.
    const std::int64_t a = std::max<std::int64_t>(2, d1 - d2 + 2);
    b[f2.min_index()] = a - 1;
    b[f1.min_index()] = d2 - d1 + a - 1;
    return b;
  }
  std::vector<BigInt> prev = disjoint_shifts(facets.first(facets.size() - 1), n);
  const Facet last = facets.back();
  const Facet before = facets[facets.size() - 2];
  BigInt sigma = 0;
  for (std::size_t i : before.indices()) sigma += prev[i];
  const BigInt k = last.size();
  const BigInt c = std::max(BigInt(1), ceil_div(k, sigma));
  for (auto& v : prev) v *= c;
  for (std::size_t i : last.indices()) prev[i] = 1;
  prev[last.max_index()] = c * sigma - (k - 1);
  return prev;
}

std::vector<BigInt> forest_shifts(std::vector<Facet> facets, std::size_t n) {
  std::vector<BigInt> b(n, 0);
  if (facets.size() == 1) {
    for (std::size_t i : facets[0].indices()) b[i] = 1;
    return b;
  }
  if (facets.size() == 2) {
    const Facet f1 = facets[0];
    const Facet f2 = facets[1];
    for (std::size_t i : (f1 | f2).indices()) b[i] = 1;
    const auto m = static_cast<std::int64_t>(f1.size());
    const auto p = static_cast<std::int64_t>((f1 - f2).size());
    const auto total = static_cast<std::int64_t>((f1 | f2).size());
    const std::int64_t e = total - m - p;
    if (e >= 0) {
      b[(f1 - f2).min_index()] = e + 1;
    } else {
      // Smallest a_n >= 2 with e + a_n >= 2.
      b[(f2 - f1).max_index()] = 1 - e;
    }
    return b;
  }

  // Peel the last leaf in facet order.
  std::size_t leaf_pos = facets.size();
  Facet witness;
  for (std::size_t k = facets.size(); k-- > 0;) {
    LeafCheck lc = leaf_in_collection(facets, facets[k]);
    if (lc.is_leaf) {
      leaf_pos = k;
      witness = *lc.witness;
      break;
    }
  }
  if (leaf_pos == facets.size()) throw Error(ErrorKind::NotForest, "sub-collection without a leaf");
  const Facet leaf = facets[leaf_pos];
  facets.erase(facets.begin() + static_cast<std::ptrdiff_t>(leaf_pos));

  VertexMask rest_support;
  for (Facet f : facets) rest_support = rest_support | f;
  const Facet free_vertices = leaf - rest_support;

  std::vector<BigInt> prev = forest_shifts(std::move(facets), n);
  BigInt sigma = 0;
  for (std::size_t i : (witness - leaf).indices()) sigma += prev[i];
  const BigInt k = free_vertices.size();
  const BigInt c = std::max(BigInt(1), ceil_div(k, sigma));
  for (auto& v : prev) v *= c;
  for (std::size_t i : free_vertices.indices()) prev[i] = 1;
  prev[free_vertices.max_index()] = c * sigma - (k - 1);
  return prev;
}

}  // namespace

ExponentTuple level_tuple_disjoint(const SimplicialComplex& c) {
  auto facets = c.facets();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      if (facets[i].intersects(facets[j])) throw Error(ErrorKind::NotDisjoint, "two facets share a vertex");
    }
  }
  return from_shifts(disjoint_shifts(facets, c.num_vertices()));
}

ExponentTuple level_tuple_forest(const SimplicialComplex& c) {
  reject_singleton_facets(c);
  if (!is_forest(c)) throw Error(ErrorKind::NotForest, "some sub-collection of facets has no leaf");
  return from_shifts(forest_shifts({c.facets().begin(), c.facets().end()}, c.num_vertices()));
}

std::vector<Facet> nonlevelable_family_facets(std::size_t n) {
  if (n < 5) throw Error(ErrorKind::TooSmall, "every complex on at most 4 vertices is levelable");
  if (n > kMaxVertices) throw Error(ErrorKind::TooManyVertices, "family size beyond 64 vertices");
  // Written with 1-based vertex numbers, shifted at the end.
  auto range = [](std::size_t from, std::size_t to, std::size_t step) {
    std::vector<std::size_t> v;
    for (std::size_t i = from; i <= to; i += step) v.push_back(i);
    return v;
  };
  std::vector<std::vector<std::size_t>> sets;
  if (n % 2 == 1) {
    sets.push_back(range(1, n, 2));
    sets.push_back(range(2, n - 1, 2));
    auto third = range(4, n - 1, 2);
    third.insert(third.begin(), 1);
    sets.push_back(third);
    auto fourth = range(5, n, 2);
    fourth.insert(fourth.begin(), 2);
    sets.push_back(fourth);
  } else {
    auto first = range(5, n, 1);
    first.insert(first.begin(), {1, 3});
    sets.push_back(first);
    auto second = range(5, n, 1);
    second.insert(second.begin(), 2);
    sets.push_back(second);
    sets.push_back({1, 4});
    sets.push_back({2, 4});
  }
  std::vector<Facet> out;
  for (auto& s : sets) {
    for (auto& i : s) --i;
    out.push_back(VertexMask::from_indices(s));
  }
  return out;
}

SimplicialComplex nonlevelable_family(std::size_t n) {
  const auto facets = nonlevelable_family_facets(n);
  return new_from_faces(VertexSet::numbered(n), facets);
}

}  // namespace levelkit
