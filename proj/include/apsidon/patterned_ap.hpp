#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "apsidon/interval_union.hpp"
#include "apsidon/prng.hpp"
#include "apsidon/rational.hpp"
#include "apsidon/search.hpp"

namespace apsidon {

// Assignment of each index k = 1..n to target set 1 or 2.
class Pattern {
 public:
  explicit Pattern(std::vector<int> assignment) : assignment_(std::move(assignment)) {
    if (assignment_.empty()) throw std::invalid_argument("Pattern: needs at least one index");
    for (int t : assignment_)
      if (t != 1 && t != 2) throw std::invalid_argument("Pattern: targets must be 1 or 2");
  }

  static Pattern alternating(int n) {
    std::vector<int> a(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) a[static_cast<std::size_t>(k - 1)] = (k % 2 == 1) ? 1 : 2;
    return Pattern(std::move(a));
  }

  int n() const { return static_cast<int>(assignment_.size()); }
  int target(int k) const { return assignment_[static_cast<std::size_t>(k - 1)]; }  // k in 1..n

 private:
  std::vector<int> assignment_;
};

struct PatternedApConfig {
  long budget = 20000;
  std::uint64_t seed = 0;
  std::uint64_t denom_bound = 65536;
};

struct PatternedAp {
  Rational x, y;
};

/*
 * Search for x + k*y landing in the open interior of its assigned union for
 * every k = 1..n.
 *
 * Phase A is deterministic alignment: for each index pair i < j and each
 * pair of parts (I, J) of their target unions, the progression through the
 * midpoints of I and J is the natural candidate (y from the midpoint gap,
 * x back-solved), and every candidate is verified exactly. Thin sets make
 * uniform sampling hopeless, but any witness progression that exists at all
 * tends to thread interval midpoints at desk scale.
 *
 * Phase B spends the remaining budget on seeded sampling: y drawn with a
 * log-spaced magnitude (small steps favor locality), term 1 anchored in a
 * random part of its target, x back-solved, then verified.
 */
inline std::variant<PatternedAp, SearchFailure> find_patterned_ap(const IntervalUnion& e1,
                                                                  const IntervalUnion& e2,
                                                                  const Pattern& pattern,
                                                                  const PatternedApConfig& cfg) {
  if (cfg.budget < 1) throw std::invalid_argument("find_patterned_ap: budget >= 1 required");
  const int n = pattern.n();
  auto target = [&](int k) -> const IntervalUnion& { return pattern.target(k) == 1 ? e1 : e2; };
  for (int k = 1; k <= n; ++k)
    if (target(k).empty()) return SearchFailure{0, std::nullopt};

  long tried = 0;
  auto admissible = [&](const Rational& x, const Rational& y) {
    ++tried;
    for (int k = 1; k <= n; ++k)
      if (!target(k).interior_contains(x + Rational(k) * y)) return false;
    return true;
  };

  const Rational half(1, 2);
  for (int i = 1; i <= n && tried < cfg.budget; ++i)
    for (int j = i + 1; j <= n && tried < cfg.budget; ++j)
      for (const auto& part_i : target(i).intervals()) {
        for (const auto& part_j : target(j).intervals()) {
          if (tried >= cfg.budget) break;
          const Rational mid_i = (part_i.first + part_i.second) * half;
          const Rational mid_j = (part_j.first + part_j.second) * half;
          if (mid_i == mid_j) continue;  // step would be zero
          const Rational y = (mid_j - mid_i) / Rational(j - i);
          const Rational x = mid_i - Rational(i) * y;
          if (admissible(x, y)) return PatternedAp{x, y};
        }
        if (tried >= cfg.budget) break;
      }

  SplitMix64 rng(cfg.seed);
  constexpr std::uint64_t kMaxExponent = 20;
  while (tried < cfg.budget) {
    const auto exponent = static_cast<unsigned long>(rng.next_below(kMaxExponent + 1));
    Rational y = sample_rational(rng, Rational(1), Rational(2), cfg.denom_bound) /
                 Rational(1L << exponent);
    if (rng.next() & 1) y = -y;
    const auto& anchor_parts = target(1).intervals();
    const auto& part = anchor_parts[static_cast<std::size_t>(
        rng.next_below(static_cast<std::uint64_t>(anchor_parts.size())))];
    const Rational t1 = sample_rational(rng, part.first, part.second, cfg.denom_bound);
    const Rational x = t1 - y;
    if (admissible(x, y)) return PatternedAp{x, y};
  }
  return SearchFailure{tried, std::nullopt};
}

}  // namespace apsidon
