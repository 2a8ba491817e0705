#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "apsidon/finite_set.hpp"
#include "apsidon/mapping.hpp"
#include "apsidon/prng.hpp"
#include "apsidon/search.hpp"
#include "apsidon/sidon.hpp"

namespace apsidon {

struct AffineCollision {
  long k1, k2;     // window indices with equal image
  Rational value;  // the shared image value
};

struct AffineCopyReport {
  bool ok;
  std::optional<AffineCollision> collision;   // set when injectivity failed
  std::optional<Quadruple> witness;           // set when the image is not Sidon
  FiniteSet image;
};

// Checks f on the window {a*k + b : kmin <= k <= kmax}: injective and image
// Sidon. Injectivity is checked first; a collision short-circuits the Sidon
// scan since the image is already degenerate.
inline AffineCopyReport check_affine_copy_window(const Mapping& f, const Rational& a,
                                                 const Rational& b, long kmin, long kmax) {
  if (a.is_zero()) throw std::invalid_argument("check_affine_copy: a must be nonzero");
  if (kmax < kmin) throw std::invalid_argument("check_affine_copy: empty window");
  std::map<Rational, long> seen;
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(kmax - kmin + 1));
  for (long k = kmin; k <= kmax; ++k) {
    Rational val = f.eval(a * Rational(k) + b);
    auto [it, inserted] = seen.emplace(val, k);
    if (!inserted)
      return AffineCopyReport{false, AffineCollision{it->second, k, val}, std::nullopt,
                              FiniteSet(std::move(values))};
    values.push_back(std::move(val));
  }
  FiniteSet image(std::move(values));
  auto witness = sidon_witness(image);
  if (witness) return AffineCopyReport{false, std::nullopt, witness, std::move(image)};
  return AffineCopyReport{true, std::nullopt, std::nullopt, std::move(image)};
}

inline AffineCopyReport check_affine_copy(const Mapping& f, const Rational& a, const Rational& b,
                                          int window) {
  if (window < 1) throw std::invalid_argument("check_affine_copy: window K >= 1 required");
  return check_affine_copy_window(f, a, b, -window, window);
}

struct AffineCopy {
  Rational a, b;
};

inline SearchConfig affine_copy_defaults() {
  SearchConfig cfg;
  cfg.box = Box{Rational(-2), Rational(2), Rational(-2), Rational(2)};
  return cfg;
}

// Seeded search for (a, b), a != 0, whose window passes check_affine_copy.
// The box's x-interval supplies a, the y-interval supplies b.
inline std::variant<AffineCopy, SearchFailure> find_affine_copy(
    const Mapping& f, int window, const SearchConfig& cfg = affine_copy_defaults()) {
  if (window < 1) throw std::invalid_argument("find_affine_copy: window K >= 1 required");
  if (cfg.budget < 1) throw std::invalid_argument("find_affine_copy: budget >= 1 required");
  SplitMix64 rng(cfg.seed);
  long tried = 0;
  while (tried < cfg.budget) {
    ++tried;
    Rational a = sample_rational(rng, cfg.box.x_lo, cfg.box.x_hi, cfg.denom_bound);
    Rational b = sample_rational(rng, cfg.box.y_lo, cfg.box.y_hi, cfg.denom_bound);
    if (a.is_zero()) continue;
    if (check_affine_copy(f, a, b, window).ok) return AffineCopy{std::move(a), std::move(b)};
  }
  return SearchFailure{tried, std::nullopt};
}

}  // namespace apsidon
