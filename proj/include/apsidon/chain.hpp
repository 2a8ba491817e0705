#pragma once

#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "apsidon/finite_set.hpp"
#include "apsidon/mapping.hpp"
#include "apsidon/prng.hpp"
#include "apsidon/progression.hpp"
#include "apsidon/search.hpp"
#include "apsidon/sidon.hpp"

namespace apsidon {

struct ChainStage {
  int n;          // progression length at this stage, 4, 5, ...
  Progression a;  // the progression itself
  FiniteSet b;    // its image under the mapping, |b| = n
};

// Invariants reestablished after every extension: m is the union of the
// stage images, forbidden = forbidden_closure(m), stage images pairwise
// disjoint, m Sidon.
struct ChainState {
  std::vector<ChainStage> stages;
  FiniteSet m;
  FiniteSet forbidden;

  static ChainState initial() { return ChainState{{}, FiniteSet(), forbidden_closure(FiniteSet())}; }

  int next_n() const { return 4 + static_cast<int>(stages.size()); }
};

/*
 * One inductive step: search for a progression of the next length whose
 * image combinations avoid forbidden_closure(m), then append it. The closure
 * constraint is what makes the step sound, so a passing candidate whose
 * image fails the explicit re-verification (size, disjointness, Sidon union)
 * indicates a bug, reported as logic_error rather than SearchFailure.
 */
inline std::variant<ChainState, SearchFailure> extend_chain(const Mapping& f,
                                                            const ChainState& state,
                                                            const SearchConfig& cfg) {
  const int n = state.next_n();
  ConstraintSpec spec{n, state.forbidden};
  auto found = find_progression(f, spec, cfg);
  if (auto* fail = std::get_if<SearchFailure>(&found)) return *fail;
  Progression a = std::get<Progression>(std::move(found));

  FiniteSet b = progression_image(f, a);
  if (static_cast<int>(b.size()) != n)
    throw std::logic_error("extend_chain: mapping not injective on accepted progression");
  for (const Rational& t : b)
    if (state.m.contains(t))
      throw std::logic_error("extend_chain: accepted image meets existing union");
  FiniteSet merged = set_union(state.m, b);
  if (!is_sidon(merged))
    throw std::logic_error("extend_chain: union lost the distinct-pair-sums property");

  ChainState next;
  next.stages = state.stages;
  next.stages.push_back(ChainStage{n, std::move(a), std::move(b)});
  next.forbidden = forbidden_closure(merged);
  next.m = std::move(merged);
  return next;
}

struct ChainFailure {
  int stage_n;  // progression length at which the search gave up
  SearchFailure failure;
};

/*
 * Runs extend_chain from the empty state up to length n_max. Each stage
 * draws its own seed from a master stream, so one seed reproduces the whole
 * chain while stages stay independent.
 */
inline std::variant<ChainState, ChainFailure> build_chain(const Mapping& f, int n_max,
                                                          const SearchConfig& cfg) {
  if (n_max < 4) throw std::invalid_argument("build_chain: n_max >= 4 required");
  SplitMix64 master(cfg.seed);
  ChainState state = ChainState::initial();
  while (state.next_n() <= n_max) {
    SearchConfig stage_cfg = cfg;
    stage_cfg.seed = master.next();
    const int n = state.next_n();
    auto step = extend_chain(f, state, stage_cfg);
    if (auto* fail = std::get_if<SearchFailure>(&step)) return ChainFailure{n, *fail};
    state = std::get<ChainState>(std::move(step));
  }
  return state;
}

}  // namespace apsidon
