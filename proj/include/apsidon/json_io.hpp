#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "apsidon/chain.hpp"
#include "apsidon/constraints.hpp"
#include "apsidon/epolynomial.hpp"
#include "apsidon/finite_set.hpp"
#include "apsidon/interval_union.hpp"
#include "apsidon/kernel.hpp"
#include "apsidon/mapping.hpp"
#include "apsidon/rational.hpp"
#include "apsidon/search.hpp"

namespace apsidon {

using json = nlohmann::ordered_json;

// Rationals travel as canonical "p/q" strings (integers as plain "p"), the
// exact form Rational::to_string emits, so round-trips are lossless.
inline json rational_to_json(const Rational& r) { return json(r.to_string()); }

inline Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected rational as \"p/q\" string");
  auto parsed = Rational::try_parse(j.get_ref<const std::string&>());
  if (!parsed) throw std::invalid_argument("malformed rational: " + j.get<std::string>());
  return *parsed;
}

inline json finite_set_to_json(const FiniteSet& s) {
  json elements = json::array();
  for (const Rational& r : s) elements.push_back(rational_to_json(r));
  return json{{"elements", std::move(elements)}};
}

inline FiniteSet finite_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw std::invalid_argument("finite set: expected {\"elements\": [...]}");
  std::vector<Rational> elements;
  for (const json& e : j["elements"]) elements.push_back(rational_from_json(e));
  return FiniteSet(std::move(elements));
}

inline json epolynomial_to_json(const EPolynomial& p) {
  json terms = json::array();
  for (const auto& [freq, coeff] : p)
    terms.push_back(json{{"freq", rational_to_json(freq)},
                         {"re", rational_to_json(coeff.re)},
                         {"im", rational_to_json(coeff.im)}});
  return json{{"terms", std::move(terms)}};
}

inline EPolynomial epolynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("exponential polynomial: expected {\"terms\": [...]}");
  EPolynomial p;
  for (const json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("freq") || !t.contains("re") || !t.contains("im"))
      throw std::invalid_argument("exponential polynomial term needs freq, re, im");
    const Rational freq = rational_from_json(t["freq"]);
    GaussianRational coeff{rational_from_json(t["re"]), rational_from_json(t["im"])};
    p.set_coeff(freq, p.coeff(freq) + coeff);
  }
  return p;
}

inline json mapping_to_json(const Mapping& f) {
  if (const auto* m = std::get_if<AffineMap>(&f.node()))
    return json{{"kind", "affine"}, {"a", rational_to_json(m->a)}, {"b", rational_to_json(m->b)}};
  if (const auto* m = std::get_if<PolynomialMap>(&f.node())) {
    json coeffs = json::array();
    for (const Rational& c : m->coeffs) coeffs.push_back(rational_to_json(c));
    return json{{"kind", "polynomial"}, {"coeffs", std::move(coeffs)}};
  }
  if (const auto* m = std::get_if<PiecewiseLinearMap>(&f.node())) {
    json bp = json::array();
    json vals = json::array();
    for (const Rational& t : m->breakpoints) bp.push_back(rational_to_json(t));
    for (const Rational& v : m->values) vals.push_back(rational_to_json(v));
    return json{{"kind", "piecewise_linear"},
                {"breakpoints", std::move(bp)},
                {"values", std::move(vals)},
                {"left_slope", rational_to_json(m->left_slope)},
                {"right_slope", rational_to_json(m->right_slope)}};
  }
  if (std::get_if<CantorMap>(&f.node())) return json{{"kind", "cantor"}};
  if (const auto* m = std::get_if<CompositeMap>(&f.node()))
    return json{{"kind", "composite"},
                {"a", rational_to_json(m->a)},
                {"b", rational_to_json(m->b)},
                {"inner", mapping_to_json(*m->inner)}};
  const auto& m = std::get<ClampedMap>(f.node());
  return json{{"kind", "clamped"},
              {"lo", rational_to_json(m.lo)},
              {"hi", rational_to_json(m.hi)},
              {"inner", mapping_to_json(*m.inner)}};
}

inline Mapping mapping_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw std::invalid_argument("mapping: expected {\"kind\": ...}");
  const std::string kind = j["kind"].get<std::string>();
  auto field = [&](const char* name) -> const json& {
    if (!j.contains(name))
      throw std::invalid_argument("mapping kind \"" + kind + "\" needs field \"" + name + "\"");
    return j[name];
  };
  if (kind == "affine")
    return Mapping::affine(rational_from_json(field("a")), rational_from_json(field("b")));
  if (kind == "polynomial") {
    const json& coeffs = field("coeffs");
    if (!coeffs.is_array()) throw std::invalid_argument("mapping: coeffs must be an array");
    std::vector<Rational> c;
    for (const json& e : coeffs) c.push_back(rational_from_json(e));
    return Mapping::polynomial(std::move(c));
  }
  if (kind == "piecewise_linear") {
    const json& bp = field("breakpoints");
    const json& vals = field("values");
    if (!bp.is_array() || !vals.is_array())
      throw std::invalid_argument("mapping: breakpoints and values must be arrays");
    std::vector<Rational> b, v;
    for (const json& e : bp) b.push_back(rational_from_json(e));
    for (const json& e : vals) v.push_back(rational_from_json(e));
    return Mapping::piecewise_linear(std::move(b), std::move(v),
                                     rational_from_json(field("left_slope")),
                                     rational_from_json(field("right_slope")));
  }
  if (kind == "cantor") return Mapping::cantor();
  if (kind == "composite")
    return Mapping::composite(rational_from_json(field("a")), rational_from_json(field("b")),
                              mapping_from_json(field("inner")));
  if (kind == "clamped")
    return Mapping::clamped(rational_from_json(field("lo")), rational_from_json(field("hi")),
                            mapping_from_json(field("inner")));
  throw std::invalid_argument("mapping: unknown kind \"" + kind + "\"");
}

inline json interval_union_to_json(const IntervalUnion& u) {
  json intervals = json::array();
  for (const auto& [lo, hi] : u.intervals())
    intervals.push_back(json::array({rational_to_json(lo), rational_to_json(hi)}));
  return json{{"intervals", std::move(intervals)}};
}

inline IntervalUnion interval_union_from_json(const json& j) {
  if (!j.is_object() || !j.contains("intervals") || !j["intervals"].is_array())
    throw std::invalid_argument("interval union: expected {\"intervals\": [...]}");
  std::vector<IntervalUnion::Interval> parts;
  for (const json& e : j["intervals"]) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("interval union: each interval is a [lo, hi] pair");
    parts.emplace_back(rational_from_json(e[0]), rational_from_json(e[1]));
  }
  return IntervalUnion(std::move(parts));
}

// vectors are reported 1-based to match their conventional names v1..v7
inline json violation_to_json(const Violation& v) {
  return json{{"vector", v.vector_index + 1},
              {"k", json(v.k)},
              {"value", rational_to_json(v.value)}};
}

inline json search_failure_to_json(const SearchFailure& f) {
  json j{{"candidates_tried", f.candidates_tried}};
  j["last_violation"] = f.last_violation ? violation_to_json(*f.last_violation) : json(nullptr);
  return j;
}

inline json chain_state_to_json(const Mapping& phi, const ChainState& state, std::uint64_t seed) {
  json chain = json::array();
  for (const ChainStage& stage : state.stages) {
    json image = json::array();
    for (const Rational& r : stage.b) image.push_back(rational_to_json(r));
    chain.push_back(json{{"n", stage.n},
                         {"x", rational_to_json(stage.a.x())},
                         {"y", rational_to_json(stage.a.y())},
                         {"image", std::move(image)}});
  }
  return json{{"phi", mapping_to_json(phi)},
              {"chain", std::move(chain)},
              {"forbidden_size", state.forbidden.size()},
              {"seed", seed}};
}

struct ChainDocument {
  Mapping phi;
  ChainState state;
  std::uint64_t seed;
};

inline ChainDocument chain_state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("phi") || !j.contains("chain") || !j["chain"].is_array())
    throw std::invalid_argument("chain state: expected {\"phi\", \"chain\", ...}");
  Mapping phi = mapping_from_json(j["phi"]);
  ChainState state = ChainState::initial();
  for (const json& e : j["chain"]) {
    if (!e.is_object() || !e.contains("n") || !e.contains("x") || !e.contains("y"))
      throw std::invalid_argument("chain state: stage needs n, x, y");
    const int n = e["n"].get<int>();
    Progression a(rational_from_json(e["x"]), rational_from_json(e["y"]), n);
    FiniteSet b = progression_image(phi, a);
    state.m = set_union(state.m, b);
    state.stages.push_back(ChainStage{n, std::move(a), std::move(b)});
  }
  state.forbidden = forbidden_closure(state.m);
  const std::uint64_t seed = j.contains("seed") ? j["seed"].get<std::uint64_t>() : 0;
  return ChainDocument{std::move(phi), std::move(state), seed};
}

inline json kernel_report_to_json(const KernelReport& r) {
  json counterexamples = json::array();
  for (const KernelCounterexample& c : r.counterexamples) {
    json e{{"k", json(c.k)}};
    e["vector"] = c.vector_index >= 0 ? json(c.vector_index + 1) : json(nullptr);
    counterexamples.push_back(std::move(e));
  }
  return json{{"K", r.k_max},
              {"tuples_checked", r.tuples_checked},
              {"counterexamples", std::move(counterexamples)}};
}

}  // namespace apsidon
