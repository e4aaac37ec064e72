#include "levelkit/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "levelkit/error.hpp"

namespace levelkit {

std::int64_t Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::int64_t{0});
}

VertexMask Monomial::support() const {
  VertexMask m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] != 0) m = m.with(i);
  }
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (exponents.size() != other.exponents.size()) {
    throw Error(ErrorKind::VariableCountMismatch, "monomials over different variable counts");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > other.exponents[i]) return false;
  }
  return true;
}

Monomial Monomial::times_variable(std::size_t i) const {
  Monomial out = *this;
  ++out.exponents.at(i);
  return out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  VertexMask sa = a.support();
  VertexMask sb = b.support();
  if (sa != sb) return lex_less(sa, sb);
  return a.exponents < b.exponents;
}

std::string to_string(const Monomial& m, const VertexSet& labels) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += '*';
    std::string name = labels.label(i);
    if (m.dual && !name.empty() && name.front() == 'x') name.front() = 'y';
    out += name;
    if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

ExponentTuple::ExponentTuple(std::vector<std::int64_t> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 2) {
      throw Error(ErrorKind::BadExponent, "exponent a" + std::to_string(i + 1) + " = " +
                                              std::to_string(values_[i]) + " is below 2");
    }
  }
}

ExponentTuple ExponentTuple::constant(std::size_t n, std::int64_t value) {
  return ExponentTuple(std::vector<std::int64_t>(n, value));
}

std::vector<std::int64_t> ExponentTuple::shifted() const {
  std::vector<std::int64_t> b(values_.size());
  std::transform(values_.begin(), values_.end(), b.begin(), [](std::int64_t a) { return a - 1; });
  return b;
}

MonomialIdeal::MonomialIdeal(std::size_t num_variables, std::vector<Monomial> generators)
    : num_variables_(num_variables) {
  for (const auto& g : generators) {
    if (g.exponents.size() != num_variables) {
      throw Error(ErrorKind::VariableCountMismatch, "generator has the wrong number of variables");
    }
  }
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const Monomial& g = generators[k];
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
      if (j == k || !generators[j].divides(g)) continue;
      // Equal generators: keep the first occurrence only.
      redundant = generators[j] != g || j < k;
    }
    if (!redundant) generators_.push_back(g);
  }
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.exponents.size() != ideal.num_variables()) {
    throw Error(ErrorKind::VariableCountMismatch, "monomial and ideal use different variable counts");
  }
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&m](const Monomial& g) { return g.divides(m); });
}

namespace {

Monomial squarefree(VertexMask w, std::size_t n) {
  Monomial m{std::vector<std::int64_t>(n, 0), false};
  for (std::size_t i : w.indices()) m.exponents[i] = 1;
  return m;
}

void require_matching(const SimplicialComplex& c, const ExponentTuple& a) {
  if (a.size() != c.num_vertices()) {
    throw Error(ErrorKind::VariableCountMismatch,
                "exponent tuple has " + std::to_string(a.size()) + " entries for " +
                    std::to_string(c.num_vertices()) + " vertices");
  }
}

}  // namespace

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c) {
  const std::size_t n = c.num_vertices();
  std::vector<VertexMask> layer;  // faces of the current size
  for (std::size_t i = 0; i < n; ++i) layer.push_back(VertexMask{}.with(i));

  std::vector<VertexMask> minimal;
  for (std::size_t size = 2; size <= n && !layer.empty(); ++size) {
    std::vector<VertexMask> next_layer;
    for (VertexMask f : layer) {
      // Extend only past the largest member so each candidate arises once.
      for (std::size_t v = f.max_index() + 1; v < n; ++v) {
        VertexMask w = f.with(v);
        if (is_face(c, w)) {
          next_layer.push_back(w);
          continue;
        }
        bool boundary_in_complex = true;
        for (std::size_t u : w.indices()) {
          if (!is_face(c, w.without(u))) {
            boundary_in_complex = false;
            break;
          }
        }
        if (boundary_in_complex) minimal.push_back(w);
      }
    }
    layer = std::move(next_layer);
  }
  std::sort(minimal.begin(), minimal.end(), graded_less);

  std::vector<Monomial> gens;
  gens.reserve(minimal.size());
  for (VertexMask w : minimal) gens.push_back(squarefree(w, n));
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal artinian_ideal(const SimplicialComplex& c, const ExponentTuple& a) {
  require_matching(c, a);
  const std::size_t n = c.num_vertices();
  std::vector<Monomial> gens = stanley_reisner_ideal(c).generators();
  for (std::size_t i = 0; i < n; ++i) {
    Monomial p{std::vector<std::int64_t>(n, 0), false};
    p.exponents[i] = a[i];
    gens.push_back(std::move(p));
  }
  return MonomialIdeal(n, std::move(gens));
}

Normalized normalize(const SimplicialComplex& c, std::span<const std::int64_t> a) {
  if (a.size() != c.num_vertices()) {
    throw Error(ErrorKind::VariableCountMismatch, "exponent list does not match the vertex count");
  }
  VertexMask keep;
  std::vector<std::int64_t> kept;
  std::vector<std::string> removed;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) {
      throw Error(ErrorKind::BadExponent,
                  "exponent a" + std::to_string(i + 1) + " = " + std::to_string(a[i]) + " is below 1");
    }
    if (a[i] == 1) {
      removed.push_back(c.vertices().label(i));
    } else {
      keep = keep.with(i);
      kept.push_back(a[i]);
    }
  }
  if (keep.empty()) throw Error(ErrorKind::CollapsedToEmpty, "every vertex has exponent 1");
  return Normalized{restrict_to(c, keep), ExponentTuple(std::move(kept)), std::move(removed)};
}

namespace {

using Poly = std::vector<BigInt>;

Poly multiply(const Poly& p, const Poly& q) {
  Poly out(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  }
  return out;
}

std::int64_t facet_weight(Facet f, const ExponentTuple& a) {
  std::int64_t w = 0;
  for (std::size_t i : f.indices()) w += a[i] - 1;
  return w;
}

void check_degree_bound(const SimplicialComplex& c, const ExponentTuple& a) {
  for (Facet f : c.facets()) {
    std::int64_t w = 0;
    for (std::size_t i : f.indices()) {
      w += a[i] - 1;
      if (w > kMaxDegree) {
        throw Error(ErrorKind::DegreeTooLarge,
                    "socle degree exceeds " + std::to_string(kMaxDegree));
      }
    }
  }
}

}  // namespace

HVector hilbert_vector(const SimplicialComplex& c, const ExponentTuple& a) {
  require_matching(c, a);
  check_degree_bound(c, a);
  Poly total{1};
  for (VertexMask face : faces(c)) {
    if (face.empty()) continue;
    Poly term{1};
    for (std::size_t i : face.indices()) {
      Poly factor(static_cast<std::size_t>(a[i]), 1);  // t + t^2 + ... + t^{a_i - 1}
      factor[0] = 0;
      term = multiply(term, factor);
    }
    if (term.size() > total.size()) total.resize(term.size(), 0);
    for (std::size_t j = 0; j < term.size(); ++j) total[j] += term[j];
  }
  while (total.size() > 1 && total.back() == 0) total.pop_back();
  return HVector{std::move(total)};
}

std::int64_t SocleVector::type() const {
  return std::accumulate(s.begin(), s.end(), std::int64_t{0});
}

bool SocleVector::is_level() const {
  return std::all_of(s.begin(), s.end() - 1, [](std::int64_t v) { return v == 0; });
}

std::vector<Monomial> inverse_system_generators(const SimplicialComplex& c, const ExponentTuple& a) {
  require_matching(c, a);
  std::vector<Monomial> out;
  out.reserve(c.num_facets());
  for (Facet f : c.facets()) {
    Monomial m{std::vector<std::int64_t>(c.num_vertices(), 0), true};
    for (std::size_t i : f.indices()) m.exponents[i] = a[i] - 1;
    out.push_back(std::move(m));
  }
  return out;
}

SocleVector socle_vector(const SimplicialComplex& c, const ExponentTuple& a) {
  require_matching(c, a);
  check_degree_bound(c, a);
  std::int64_t top = 0;
  for (Facet f : c.facets()) top = std::max(top, facet_weight(f, a));
  SocleVector out{std::vector<std::int64_t>(static_cast<std::size_t>(top) + 1, 0)};
  for (Facet f : c.facets()) ++out.s[static_cast<std::size_t>(facet_weight(f, a))];
  return out;
}

std::vector<Monomial> socle_bruteforce(const SimplicialComplex& c, const ExponentTuple& a,
                                       std::uint64_t box_cap) {
  require_matching(c, a);
  const std::size_t n = c.num_vertices();
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto side = static_cast<std::uint64_t>(a[i]);
    if (box > box_cap / side) {
      throw Error(ErrorKind::BoxTooLarge,
                  "exponent box exceeds the cap of " + std::to_string(box_cap) + " points");
    }
    box *= side;
  }

  const MonomialIdeal ideal = artinian_ideal(c, a);
  std::vector<Monomial> socle;
  Monomial m{std::vector<std::int64_t>(n, 0), false};
  while (true) {
    if (!contains(ideal, m)) {
      bool annihilated = true;
      for (std::size_t i = 0; i < n && annihilated; ++i) {
        annihilated = contains(ideal, m.times_variable(i));
      }
      if (annihilated) socle.push_back(m);
    }
    // Odometer step over Π [0, a_i - 1].
    std::size_t i = 0;
    while (i < n && m.exponents[i] == a[i] - 1) m.exponents[i++] = 0;
    if (i == n) break;
    ++m.exponents[i];
  }
  std::sort(socle.begin(), socle.end(), canonical_less);
  return socle;
}

std::int64_t cm_type(const SimplicialComplex& c) { return static_cast<std::int64_t>(c.num_facets()); }

bool is_gorenstein(const SimplicialComplex& c) { return c.num_facets() == 1; }

std::int64_t BettiTail::total() const {
  std::int64_t sum = 0;
  for (const auto& p : pairs) sum += p.multiplicity;
  return sum;
}

BettiTail betti_tail(const Graph& g) {
  const SimplicialComplex delta = independence_complex(g);
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  const SocleVector s = socle_vector(delta, ExponentTuple::constant(g.num_vertices(), 2));
  BettiTail tail;
  for (std::size_t j = 0; j < s.s.size(); ++j) {
    if (s.s[j] > 0) tail.pairs.push_back({static_cast<std::int64_t>(j) + n, s.s[j]});
  }
  return tail;
}

}  // namespace levelkit
