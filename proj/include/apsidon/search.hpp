#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>

#include "apsidon/constraints.hpp"
#include "apsidon/mapping.hpp"
#include "apsidon/prng.hpp"
#include "apsidon/progression.hpp"
#include "apsidon/rational.hpp"

namespace apsidon {

struct Box {
  Rational x_lo, x_hi, y_lo, y_hi;
};

enum class SampleMode { random, grid };

struct SearchConfig {
  long budget = 2000;
  std::uint64_t seed = 0;
  std::uint64_t denom_bound = 65536;
  Box box{Rational(0), Rational(1), Rational(1), Rational(2)};
  SampleMode mode = SampleMode::random;
};

// Exhausted budget is an ordinary outcome, not an error: mappings with an
// affine-like nonlinearity class admit no witness at all.
struct SearchFailure {
  long candidates_tried = 0;
  std::optional<Violation> last_violation;
};

/*
 * Budgeted search for a progression of length spec.n passing
 * check_progression. Random mode draws (x, y) from the box with the seeded
 * sampler; grid mode sweeps nested lattices (depth d places d+1 equispaced
 * points per axis, x major then y) so the first admissible point in schedule
 * order is returned reproducibly. Candidates with y = 0 can never be
 * admissible and are skipped, but still count against the budget.
 */
inline std::variant<Progression, SearchFailure> find_progression(const Mapping& f,
                                                                 const ConstraintSpec& spec,
                                                                 const SearchConfig& cfg) {
  if (cfg.budget < 1) throw std::invalid_argument("find_progression: budget >= 1 required");
  if (cfg.box.x_hi < cfg.box.x_lo || cfg.box.y_hi < cfg.box.y_lo)
    throw std::invalid_argument("find_progression: degenerate box");

  long tried = 0;
  std::optional<Violation> last;
  auto consider = [&](const Rational& x, const Rational& y) -> std::optional<Progression> {
    ++tried;
    if (y.is_zero()) return std::nullopt;
    Progression p(x, y, spec.n);
    if (auto v = check_progression(f, p, spec)) {
      last = std::move(*v);
      return std::nullopt;
    }
    return p;
  };

  if (cfg.mode == SampleMode::random) {
    SplitMix64 rng(cfg.seed);
    while (tried < cfg.budget) {
      const Rational x = sample_rational(rng, cfg.box.x_lo, cfg.box.x_hi, cfg.denom_bound);
      const Rational y = sample_rational(rng, cfg.box.y_lo, cfg.box.y_hi, cfg.denom_bound);
      if (auto p = consider(x, y)) return *p;
    }
  } else {
    const Rational wx = cfg.box.x_hi - cfg.box.x_lo;
    const Rational wy = cfg.box.y_hi - cfg.box.y_lo;
    for (long depth = 1; tried < cfg.budget; ++depth) {
      for (long i = 0; i <= depth && tried < cfg.budget; ++i) {
        const Rational x = cfg.box.x_lo + wx * Rational(i, depth);
        for (long j = 0; j <= depth && tried < cfg.budget; ++j) {
          const Rational y = cfg.box.y_lo + wy * Rational(j, depth);
          if (auto p = consider(x, y)) return *p;
        }
      }
    }
  }
  return SearchFailure{tried, std::move(last)};
}

}  // namespace apsidon
