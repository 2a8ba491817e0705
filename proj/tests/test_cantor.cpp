#include <gtest/gtest.h>

#include <stdexcept>

#include "apsidon/mapping.hpp"
#include "apsidon/prng.hpp"

using apsidon::cantor_value;
using apsidon::Rational;

TEST(Cantor, EndpointAndCornerFixtures) {
  EXPECT_EQ(cantor_value(Rational(0)), Rational(0));
  EXPECT_EQ(cantor_value(Rational(1)), Rational(1));
  EXPECT_EQ(cantor_value(Rational(1, 3)), Rational(1, 2));
  EXPECT_EQ(cantor_value(Rational(2, 3)), Rational(1, 2));
  EXPECT_EQ(cantor_value(Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(cantor_value(Rational(1, 4)), Rational(1, 3));
  EXPECT_EQ(cantor_value(Rational(3, 4)), Rational(2, 3));
  EXPECT_EQ(cantor_value(Rational(1, 9)), Rational(1, 4));
  EXPECT_EQ(cantor_value(Rational(2, 9)), Rational(1, 4));
  EXPECT_EQ(cantor_value(Rational(8, 9)), Rational(3, 4));
  // 3/10 = 0.(0220) base 3 with no digit 1: bits 0110 repeating give 6/15.
  EXPECT_EQ(cantor_value(Rational(3, 10)), Rational(2, 5));
}

TEST(Cantor, RejectsOutsideUnitInterval) {
  EXPECT_THROW(cantor_value(Rational(-1, 10)), std::domain_error);
  EXPECT_THROW(cantor_value(Rational(11, 10)), std::domain_error);
}

TEST(Cantor, SelfSimilarityIdentities) {
  // c(t/3) = c(t)/2 and c(1 - t) = 1 - c(t) pin the staircase uniquely among
  // monotone functions with c(0)=0, c(1)=1.
  apsidon::SplitMix64 rng(1234);
  for (int trial = 0; trial < 250; ++trial) {
    const Rational t = apsidon::sample_rational(rng, Rational(0), Rational(1), 1000000);
    const Rational c = cantor_value(t);
    EXPECT_EQ(cantor_value(t / Rational(3)), c / Rational(2)) << t.to_string();
    EXPECT_EQ(cantor_value(Rational(1) - t), Rational(1) - c) << t.to_string();
    EXPECT_GE(c.sign(), 0);
    EXPECT_LE(c, Rational(1));
  }
}

TEST(Cantor, MonotoneOnSortedSamples) {
  apsidon::SplitMix64 rng(5678);
  Rational prev_t(0), prev_c(0);
  // Walk rightward through random points; the staircase must never decrease.
  for (int step = 0; step < 100; ++step) {
    const Rational t = apsidon::sample_rational(rng, prev_t, Rational(1), 100000);
    const Rational c = cantor_value(t);
    EXPECT_GE(c, prev_c) << "at t=" << t.to_string();
    prev_t = t;
    prev_c = c;
  }
}

TEST(Cantor, MappingNodeClampsOutside) {
  const apsidon::Mapping f = apsidon::Mapping::cantor();
  EXPECT_EQ(f.eval(Rational(-5)), Rational(0));
  EXPECT_EQ(f.eval(Rational(7)), Rational(1));
  EXPECT_EQ(f.eval(Rational(1, 4)), Rational(1, 3));
}

TEST(Cantor, LargeDenominatorsStayExact) {
  // 1/(3^k) maps to 1/(2^k); exercises the preperiod path beyond the int64
  // fast lane when k is large.
  mpz_class p3(1), p2(1);
  for (int k = 1; k <= 50; ++k) {
    p3 *= 3;
    p2 *= 2;
    EXPECT_EQ(cantor_value(Rational(mpz_class(1), p3)), Rational(mpz_class(1), p2));
  }
  // A long purely periodic expansion: t = 1/(2^40) has odd-free denominator?
  // (2^40 is not divisible by 3, so the expansion is purely periodic.)
  const Rational t(mpz_class(1), mpz_class(1) << 40);
  const Rational c = cantor_value(t);
  EXPECT_EQ(cantor_value(t / Rational(3)), c / Rational(2));
}
