#pragma once

// Shared seeded generators for property tests. Everything flows from one
// SplitMix64 per test so failures reproduce exactly.

#include <vector>

#include "apsidon/epolynomial.hpp"
#include "apsidon/finite_set.hpp"
#include "apsidon/prng.hpp"
#include "apsidon/rational.hpp"
#include "oracles.hpp"

namespace testgen {

using apsidon::FiniteSet;
using apsidon::Rational;
using apsidon::SplitMix64;

inline FiniteSet random_set(SplitMix64& rng, int max_size, std::uint64_t denom_bound) {
  const int size = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_size)));
  std::vector<Rational> elems;
  elems.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i)
    elems.push_back(apsidon::sample_rational(rng, Rational(-5), Rational(5), denom_bound));
  return FiniteSet(std::move(elems));
}

inline FiniteSet random_sidon_set(SplitMix64& rng, int max_size, std::uint64_t denom_bound) {
  while (true) {
    FiniteSet s = random_set(rng, max_size, denom_bound);
    if (oracle::is_sidon(s)) return s;
  }
}

inline apsidon::GaussianRational random_coeff(SplitMix64& rng, std::uint64_t denom_bound) {
  return apsidon::GaussianRational{
      apsidon::sample_rational(rng, Rational(-3), Rational(3), denom_bound),
      apsidon::sample_rational(rng, Rational(-3), Rational(3), denom_bound)};
}

inline apsidon::EPolynomial random_epolynomial(SplitMix64& rng, const FiniteSet& support,
                                               std::uint64_t denom_bound) {
  apsidon::EPolynomial p;
  for (const Rational& f : support) p.set_coeff(f, random_coeff(rng, denom_bound));
  return p;
}

}  // namespace testgen
