#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "apsidon/finite_set.hpp"
#include "apsidon/rational.hpp"

namespace apsidon {

// One additive relation a + b = c + d. Nontrivial means {a,b} != {c,d} as
// multisets; a set has distinct sums of pairs (is Sidon) iff none exists.
struct Quadruple {
  Rational a, b, c, d;

  bool trivial() const {
    return (a == c && b == d) || (a == d && b == c);
  }
  friend bool operator==(const Quadruple& x, const Quadruple& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// Number of ordered 4-tuples (l1,l2,l3,l4) in E^4 with l1+l2 = l3+l4,
// computed as sum over s of r(s)^2 where r is the ordered pair-sum
// histogram. Equals 2n^2 - n exactly when E is Sidon.
inline std::int64_t additive_energy(const FiniteSet& e) {
  std::map<Rational, std::int64_t> hist;
  for (const Rational& x : e)
    for (const Rational& y : e) ++hist[x + y];
  std::int64_t total = 0;
  for (const auto& [sum, count] : hist) total += count * count;
  return total;
}

inline std::int64_t sidon_energy_bound(std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return 2 * m * m - m;
}

// Sidon iff all unordered pair sums e[i]+e[j], i <= j, are distinct.
inline bool is_sidon(const FiniteSet& e) {
  std::map<Rational, int> seen;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i; j < e.size(); ++j)
      if (++seen[e[i] + e[j]] > 1) return false;
  return true;
}

// First nontrivial quadruple in lexicographic order over the sorted-element
// index tuple (i1,i2,i3,i4); nullopt when E is Sidon. The per-sum pair lists
// are built in (i3,i4)-lexicographic order, so scanning a list for the first
// nontrivial partner reproduces the full four-fold scan's order.
inline std::optional<Quadruple> sidon_witness(const FiniteSet& e) {
  const std::size_t n = e.size();
  std::map<Rational, std::vector<std::pair<std::size_t, std::size_t>>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pairs[e[i] + e[j]].push_back({i, j});
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      const auto& cands = pairs[e[i1] + e[i2]];
      for (const auto& [i3, i4] : cands) {
        const bool trivial = (i3 == i1 && i4 == i2) || (i3 == i2 && i4 == i1);
        if (!trivial) return Quadruple{e[i1], e[i2], e[i3], e[i4]};
      }
    }
  return std::nullopt;
}

}  // namespace apsidon
