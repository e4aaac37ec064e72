#include "levelkit/commands.hpp"

#include <string>

#include "levelkit/error.hpp"
#include "levelkit/levelability.hpp"

namespace levelkit {

using nlohmann::json;

namespace {

struct Prepared {
  SimplicialComplex complex;
  std::optional<ExponentTuple> exponents;
  json normalized;  // null unless a reduction ran
};

json tuple_json(const ExponentTuple& a) { return a.values(); }

json normalized_json(const SimplicialComplex& c, const std::vector<std::string>& removed,
                     const std::optional<ExponentTuple>& a) {
  ComplexDocument doc = to_document(c);
  if (a) doc.exponents = a->values();
  json j = to_json(doc);
  j["removed"] = removed;
  return j;
}

// Complex plus admissible exponents, applying the a_i = 1 reduction on request.
Prepared prepare_with_exponents(const ComplexDocument& doc, const CommandOptions& opts) {
  if (!doc.exponents) {
    throw Error(ErrorKind::ParseError, "field 'exponents': required by this command");
  }
  SimplicialComplex c = to_complex(doc);
  if (!opts.normalize) return Prepared{c, ExponentTuple(*doc.exponents), json()};
  Normalized n = normalize(c, *doc.exponents);
  json info = normalized_json(n.complex, n.removed, n.exponents);
  return Prepared{n.complex, n.exponents, std::move(info)};
}

// Complex only, dropping singleton-facet vertices on request.
Prepared prepare_for_levelability(const ComplexDocument& doc, const CommandOptions& opts) {
  SimplicialComplex c = to_complex(doc);
  if (!opts.normalize) return Prepared{c, std::nullopt, json()};
  VertexMask keep = c.vertices().all();
  std::vector<std::string> removed;
  for (Facet f : c.facets()) {
    if (f.size() == 1) {
      keep = keep - f;
      removed.push_back(c.vertices().label(f.min_index()));
    }
  }
  if (keep.empty()) throw Error(ErrorKind::CollapsedToEmpty, "every facet is a single vertex");
  SimplicialComplex reduced = restrict_to(c, keep);
  json info = normalized_json(reduced, removed, std::nullopt);
  return Prepared{reduced, std::nullopt, std::move(info)};
}

json system_json(const SimplicialComplex& c) {
  json rows = json::array();
  json rhs = json::array();
  if (c.num_facets() >= 2) {
    for (const auto& row : build_system(c).rows) {
      rows.push_back(row.coeffs);
      rhs.push_back(row.rhs);
    }
  }
  return json{{"rows", rows}, {"rhs", rhs}};
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Pure: return "pure";
    case Strategy::Disjoint: return "disjoint";
    case Strategy::Forest: return "forest";
    case Strategy::Auto: return "auto";
  }
  return "auto";
}

bool is_precondition_failure(ErrorKind k) {
  return k == ErrorKind::NotPure || k == ErrorKind::NotDisjoint || k == ErrorKind::NotForest ||
         k == ErrorKind::SingletonFacet || k == ErrorKind::TooManyFacets;
}

ExponentTuple run_strategy(const SimplicialComplex& c, Strategy s) {
  switch (s) {
    case Strategy::Pure: return level_tuple_pure(c, 2);
    case Strategy::Disjoint: return level_tuple_disjoint(c);
    case Strategy::Forest: return level_tuple_forest(c);
    case Strategy::Auto: break;
  }
  throw std::logic_error("auto is not a single strategy");
}

}  // namespace

Strategy parse_strategy(std::string_view name) {
  if (name == "pure") return Strategy::Pure;
  if (name == "disjoint") return Strategy::Disjoint;
  if (name == "forest") return Strategy::Forest;
  if (name == "auto") return Strategy::Auto;
  throw Error(ErrorKind::ParseError, "unknown strategy '" + std::string(name) +
                                         "' (expected pure, disjoint, forest or auto)");
}

CommandResult cmd_socle(const ComplexDocument& doc, const CommandOptions& opts) {
  const Prepared p = prepare_with_exponents(doc, opts);
  const SimplicialComplex& c = p.complex;
  const ExponentTuple& a = *p.exponents;

  const HVector h = hilbert_vector(c, a);
  const SocleVector s = socle_vector(c, a);
  json hv = json::array();
  for (const auto& v : h.h) hv.push_back(bigint_json(v));
  json gens = json::array();
  for (const auto& m : inverse_system_generators(c, a)) gens.push_back(monomial_json(m, c.vertices()));

  json body{{"h_vector", hv},
            {"socle_vector", s.s},
            {"socle_degree", s.socle_degree()},
            {"type", s.type()},
            {"inverse_system_generators", gens},
            {"is_level", s.is_level()},
            {"is_gorenstein", is_gorenstein(c)}};
  if (!p.normalized.is_null()) body["normalized"] = p.normalized;
  return {body, 0};
}

CommandResult cmd_levelable(const ComplexDocument& doc, const CommandOptions& opts) {
  const Prepared p = prepare_for_levelability(doc, opts);
  const SimplicialComplex& c = p.complex;
  const LevelDecision d = decide_levelable(c);

  json body{{"verdict", std::string(to_string(d.verdict))}, {"system", system_json(c)}};
  if (d.certificate) body["certificate"] = tuple_json(*d.certificate);
  if (d.verdict == Verdict::NotLevelable) {
    body["report"] = d.report;
    json forced = json::array();
    for (std::size_t i : d.forced_zero) forced.push_back(c.vertices().label(i));
    body["forced_vertices"] = forced;
  }
  if (!p.normalized.is_null()) body["normalized"] = p.normalized;
  return {body, d.verdict == Verdict::NotLevelable ? 1 : 0};
}

CommandResult cmd_construct(const ComplexDocument& doc, Strategy strategy, const CommandOptions& opts) {
  const Prepared p = prepare_for_levelability(doc, opts);
  const SimplicialComplex& c = p.complex;

  json body;
  if (!p.normalized.is_null()) body["normalized"] = p.normalized;

  if (strategy != Strategy::Auto) {
    try {
      const ExponentTuple a = run_strategy(c, strategy);
      body["strategy"] = std::string(strategy_name(strategy));
      body["certificate"] = tuple_json(a);
      body["verified"] = verify_certificate(c, a);
      body["solver_verdict"] = std::string(to_string(decide_levelable(c).verdict));
      return {body, 0};
    } catch (const Error& e) {
      if (!is_precondition_failure(e.kind())) throw;
      throw Error(ErrorKind::StrategyInapplicable,
                  std::string(strategy_name(strategy)) + " strategy needs its precondition: " + e.what());
    }
  }

  json attempts = json::array();
  for (Strategy s : {Strategy::Pure, Strategy::Disjoint, Strategy::Forest}) {
    try {
      const ExponentTuple a = run_strategy(c, s);
      body["strategy"] = std::string(strategy_name(s));
      body["certificate"] = tuple_json(a);
      body["verified"] = verify_certificate(c, a);
      body["solver_verdict"] = std::string(to_string(decide_levelable(c).verdict));
      body["attempts"] = attempts;
      return {body, 0};
    } catch (const Error& e) {
      if (!is_precondition_failure(e.kind())) throw;
      attempts.push_back(json{{"strategy", std::string(strategy_name(s))},
                              {"error", std::string(to_string(ErrorKind::StrategyInapplicable))},
                              {"reason", e.what()}});
    }
  }

  const LevelDecision d = decide_levelable(c);
  body["strategy"] = "solver";
  body["attempts"] = attempts;
  body["solver_verdict"] = std::string(to_string(d.verdict));
  if (d.certificate) {
    body["certificate"] = tuple_json(*d.certificate);
    body["verified"] = verify_certificate(c, *d.certificate);
    return {body, 0};
  }
  body["report"] = d.report;
  return {body, 1};
}

CommandResult cmd_family(std::int64_t n) {
  if (n < 5) throw Error(ErrorKind::TooSmall, "every complex on at most 4 vertices is levelable");
  const auto size = static_cast<std::size_t>(n);
  const VertexSet labels = VertexSet::numbered(size);
  ComplexDocument doc;
  doc.vertices = labels.labels();
  for (Facet f : nonlevelable_family_facets(size)) {
    std::vector<std::string> names;
    for (std::size_t i : f.indices()) names.push_back(labels.label(i));
    doc.facets.push_back(std::move(names));
  }
  return {to_json(doc), 0};
}

CommandResult cmd_graph(const GraphDocument& doc) {
  const Graph g = to_graph(doc);
  const SimplicialComplex delta = independence_complex(g);
  const BettiTail tail = betti_tail(g);
  json pairs = json::array();
  for (const auto& p : tail.pairs) pairs.push_back(json{{"shift", p.shift}, {"multiplicity", p.multiplicity}});
  json body{{"independence_complex", to_json(to_document(delta))},
            {"max_independent_set_count", delta.num_facets()},
            {"betti_tail", pairs},
            {"type", cm_type(delta)}};
  return {body, 0};
}

CommandResult cmd_oracle(const ComplexDocument& doc, const CommandOptions& opts) {
  const Prepared p = prepare_with_exponents(doc, opts);
  const SimplicialComplex& c = p.complex;
  const ExponentTuple& a = *p.exponents;

  const auto found = socle_bruteforce(c, a, opts.max_box);
  auto predicted = inverse_system_generators(c, a);
  for (auto& m : predicted) m.dual = false;
  const bool match = found == predicted;

  json monomials = json::array();
  for (const auto& m : found) monomials.push_back(monomial_json(m, c.vertices()));
  json body{{"monomials", monomials}, {"match", match}};
  if (!p.normalized.is_null()) body["normalized"] = p.normalized;
  return {body, match ? 0 : 1};
}

}  // namespace levelkit
