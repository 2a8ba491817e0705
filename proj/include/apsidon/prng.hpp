#pragma once

#include <cstdint>
#include <stdexcept>

#include "apsidon/rational.hpp"

namespace apsidon {

/*
 * SplitMix64 (Steele, Lea, Flood), the fixed candidate generator. Chosen for
 * its tiny state, full-period guarantee on 2^64 seeds, and trivially
 * reproducible splitting: a child generator seeded from next() is
 * statistically independent of the parent stream, which is how per-stage
 * seeds are derived during chain building.
 */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform over [0, n) by 128-bit multiply-high; n >= 1
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(n)) >> 64);
  }

  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

/*
 * Uniform rational from [lo, hi] with denominator <= denom_bound: draw the
 * denominator q first, then the numerator uniformly from the integers that
 * land inside the interval. A thin interval can be missed by a coarse q, in
 * which case q is redrawn; the bound on retries only trips for intervals
 * thinner than every admissible spacing.
 */
inline Rational sample_rational(SplitMix64& rng, const Rational& lo, const Rational& hi,
                                std::uint64_t denom_bound) {
  if (denom_bound < 1) throw std::invalid_argument("sample_rational: denominator bound >= 1");
  if (hi < lo) throw std::invalid_argument("sample_rational: empty interval");
  for (int attempt = 0; attempt < 64; ++attempt) {
    const auto q = static_cast<unsigned long>(rng.next_below(denom_bound) + 1);
    const Rational scale(static_cast<long>(q));
    const Rational slo = lo * scale;
    const Rational shi = hi * scale;
    mpz_class slo_num = slo.num(), slo_den = slo.den();
    mpz_class shi_num = shi.num(), shi_den = shi.den();
    mpz_class nlo, nhi;
    mpz_cdiv_q(nlo.get_mpz_t(), slo_num.get_mpz_t(), slo_den.get_mpz_t());
    mpz_fdiv_q(nhi.get_mpz_t(), shi_num.get_mpz_t(), shi_den.get_mpz_t());
    if (nlo > nhi) continue;
    mpz_class width = nhi - nlo + 1;
    if (!width.fits_ulong_p())
      throw std::invalid_argument("sample_rational: interval too wide for 64-bit sampling");
    const std::uint64_t offset = rng.next_below(width.get_ui());
    return Rational(nlo + static_cast<unsigned long>(offset), q);
  }
  throw std::runtime_error("sample_rational: no rational with bounded denominator in interval");
}

}  // namespace apsidon
