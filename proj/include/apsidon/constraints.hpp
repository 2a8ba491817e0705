#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "apsidon/finite_set.hpp"
#include "apsidon/mapping.hpp"
#include "apsidon/progression.hpp"
#include "apsidon/rational.hpp"

namespace apsidon {

/*
 * The seven coefficient vectors whose combinations Σ v_j f(x + k_j y) must
 * avoid the forbidden set. Order is load-bearing: violations are reported in
 * fixed scan order (vector index major, k lexicographic) so counterexamples
 * are stable fixtures.
 */
inline constexpr std::array<std::array<int, 4>, 7> kConstraintVectors{{
    {{1, 1, -1, -1}},
    {{1, 1, -2, 0}},
    {{1, -1, 0, 0}},
    {{1, 1, 0, 0}},
    {{2, 0, 0, 0}},
    {{1, 1, -1, 0}},
    {{1, 0, 0, 0}},
}};

struct ConstraintSpec {
  int n;               // progression length, >= 4
  FiniteSet forbidden;  // values the combinations must avoid
};

struct Violation {
  int vector_index;       // 0-based into kConstraintVectors
  std::array<int, 4> k;   // indices in [1, n]; zero in slots outside the vector's support
  Rational value;         // the forbidden value attained

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.vector_index == b.vector_index && a.k == b.k && a.value == b.value;
  }
};

/*
 * First violation in scan order, or nullopt when every combination avoids
 * the forbidden set. k ranges over pairwise-distinct values in [1, n] on the
 * support of each vector only; slots with coefficient zero contribute
 * nothing, and filling them with spare distinct values never changes the
 * verdict for n >= 4 (tested against the full enumeration).
 */
inline std::optional<Violation> check_progression(const Mapping& f, const Progression& p,
                                                  const ConstraintSpec& spec) {
  if (spec.n < 4) throw std::invalid_argument("check_progression: spec needs n >= 4");
  if (p.n() != spec.n)
    throw std::invalid_argument("check_progression: progression length differs from spec");
  const int n = spec.n;

  std::vector<Rational> val(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) val[static_cast<std::size_t>(k)] = f.eval(p.term(k));

  for (int vi = 0; vi < static_cast<int>(kConstraintVectors.size()); ++vi) {
    const auto& v = kConstraintVectors[static_cast<std::size_t>(vi)];
    std::array<int, 4> support{};
    int support_size = 0;
    for (int j = 0; j < 4; ++j)
      if (v[static_cast<std::size_t>(j)] != 0) support[static_cast<std::size_t>(support_size++)] = j;

    std::array<int, 4> k{};
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::optional<Violation> found;
    auto scan = [&](auto&& self, int depth, const Rational& acc) -> bool {
      if (depth == support_size) {
        if (spec.forbidden.contains(acc)) {
          found = Violation{vi, k, acc};
          return true;
        }
        return false;
      }
      const int slot = support[static_cast<std::size_t>(depth)];
      for (int kv = 1; kv <= n; ++kv) {
        if (used[static_cast<std::size_t>(kv)]) continue;
        used[static_cast<std::size_t>(kv)] = 1;
        k[static_cast<std::size_t>(slot)] = kv;
        const bool hit = self(self, depth + 1,
                              acc + Rational(v[static_cast<std::size_t>(slot)]) *
                                        val[static_cast<std::size_t>(kv)]);
        used[static_cast<std::size_t>(kv)] = 0;
        if (hit) return true;
        k[static_cast<std::size_t>(slot)] = 0;
      }
      return false;
    };
    if (scan(scan, 0, Rational(0))) return found;
  }
  return std::nullopt;
}

}  // namespace apsidon
