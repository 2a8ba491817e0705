#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "apsidon/mapping.hpp"

using apsidon::Mapping;
using apsidon::NonlinearityClass;
using apsidon::Rational;

TEST(Mapping, AffineAndPolynomialEval) {
  const Mapping f = Mapping::affine(Rational(2), Rational(-1));
  EXPECT_EQ(f.eval(Rational(3)), Rational(5));
  EXPECT_EQ(f.eval(Rational(1, 2)), Rational(0));

  const Mapping sq = Mapping::polynomial({Rational(0), Rational(0), Rational(1)});
  EXPECT_EQ(sq.eval(Rational(-3)), Rational(9));
  EXPECT_EQ(sq.eval(Rational(1, 2)), Rational(1, 4));

  const Mapping cubic =
      Mapping::polynomial({Rational(1), Rational(-2), Rational(0), Rational(1)});
  EXPECT_EQ(cubic.eval(Rational(2)), Rational(5));  // 1 - 4 + 8
}

TEST(Mapping, PolynomialNormalizationAndDegreeCap) {
  // Trailing zero coefficients are trimmed, so this is really affine.
  const Mapping p = Mapping::polynomial({Rational(1), Rational(2), Rational(0)});
  EXPECT_EQ(p.nonlinearity_class(), NonlinearityClass::empty);
  std::vector<Rational> too_many(10, Rational(1));
  EXPECT_THROW(Mapping::polynomial(too_many), std::invalid_argument);
  // The empty coefficient list is the zero polynomial.
  EXPECT_EQ(Mapping::polynomial({}).eval(Rational(7)), Rational(0));
}

TEST(Mapping, PiecewiseLinearInterpolatesAndExtends) {
  const Mapping f = Mapping::piecewise_linear(
      {Rational(0), Rational(1), Rational(3)}, {Rational(0), Rational(2), Rational(1)},
      Rational(-1), Rational(4));
  EXPECT_EQ(f.eval(Rational(0)), Rational(0));
  EXPECT_EQ(f.eval(Rational(1)), Rational(2));
  EXPECT_EQ(f.eval(Rational(1, 2)), Rational(1));
  EXPECT_EQ(f.eval(Rational(2)), Rational(3, 2));
  // Left of the first breakpoint: slope -1 from value 0.
  EXPECT_EQ(f.eval(Rational(-2)), Rational(2));
  // Right of the last breakpoint: slope 4 from value 1.
  EXPECT_EQ(f.eval(Rational(5)), Rational(9));
}

TEST(Mapping, PiecewiseLinearValidation) {
  EXPECT_THROW(Mapping::piecewise_linear({}, {}, Rational(0), Rational(0)),
               std::invalid_argument);
  EXPECT_THROW(Mapping::piecewise_linear({Rational(0), Rational(0)},
                                         {Rational(1), Rational(2)}, Rational(0),
                                         Rational(0)),
               std::invalid_argument);
  EXPECT_THROW(Mapping::piecewise_linear({Rational(0), Rational(1)}, {Rational(1)},
                                         Rational(0), Rational(0)),
               std::invalid_argument);
}

TEST(Mapping, CompositeAndClampedEval) {
  const Mapping sq = Mapping::polynomial({Rational(0), Rational(0), Rational(1)});
  const Mapping g = Mapping::composite(Rational(3), Rational(1), sq);
  EXPECT_EQ(g.eval(Rational(2)), Rational(13));  // 3*4 + 1

  const Mapping c = Mapping::clamped(Rational(-1), Rational(1), sq);
  EXPECT_EQ(c.eval(Rational(1, 2)), Rational(1, 4));
  EXPECT_EQ(c.eval(Rational(5)), Rational(1));    // evaluated at the hi clamp
  EXPECT_EQ(c.eval(Rational(-7)), Rational(1));   // evaluated at the lo clamp
  EXPECT_THROW(Mapping::clamped(Rational(1), Rational(1), sq), std::invalid_argument);
}

TEST(Mapping, ExtendConstantFreezesOutsideWindow) {
  const Mapping f = Mapping::affine(Rational(2), Rational(0));
  const Mapping e = apsidon::extend_constant(f, Rational(0), Rational(1));
  EXPECT_EQ(e.eval(Rational(1, 2)), Rational(1));
  EXPECT_EQ(e.eval(Rational(-10)), Rational(0));
  EXPECT_EQ(e.eval(Rational(10)), Rational(2));
}

TEST(Mapping, NonlinearityClasses) {
  const Mapping aff = Mapping::affine(Rational(1), Rational(5));
  const Mapping sq = Mapping::polynomial({Rational(0), Rational(0), Rational(1)});
  EXPECT_EQ(aff.nonlinearity_class(), NonlinearityClass::empty);
  EXPECT_EQ(sq.nonlinearity_class(), NonlinearityClass::positive_measure);
  EXPECT_EQ(Mapping::cantor().nonlinearity_class(),
            NonlinearityClass::nowhere_dense_null);
  const Mapping pwl = Mapping::piecewise_linear({Rational(0), Rational(1)},
                                                {Rational(0), Rational(1)},
                                                Rational(0), Rational(0));
  EXPECT_EQ(pwl.nonlinearity_class(), NonlinearityClass::finite);
  // Scaling by zero flattens everything.
  EXPECT_EQ(Mapping::composite(Rational(0), Rational(1), sq).nonlinearity_class(),
            NonlinearityClass::empty);
  EXPECT_EQ(Mapping::composite(Rational(2), Rational(0), sq).nonlinearity_class(),
            NonlinearityClass::positive_measure);
  // Clamping an affine map leaves at most finitely many corners.
  EXPECT_EQ(Mapping::clamped(Rational(0), Rational(1), aff).nonlinearity_class(),
            NonlinearityClass::finite);
  EXPECT_EQ(Mapping::clamped(Rational(0), Rational(1), sq).nonlinearity_class(),
            NonlinearityClass::positive_measure);
  EXPECT_EQ(to_string(NonlinearityClass::nowhere_dense_null), "nowhere-dense-null");
  EXPECT_EQ(to_string(NonlinearityClass::positive_measure), "positive-measure");
}

TEST(Mapping, ParseSpecStrings) {
  auto aff = apsidon::parse_mapping_spec("affine:2,-1");
  ASSERT_TRUE(aff.has_value());
  EXPECT_EQ(aff->eval(Rational(3)), Rational(5));

  auto poly = apsidon::parse_mapping_spec("poly:0,0,1");
  ASSERT_TRUE(poly.has_value());
  EXPECT_EQ(poly->eval(Rational(4)), Rational(16));

  auto half = apsidon::parse_mapping_spec("poly:1/2,1/3");
  ASSERT_TRUE(half.has_value());
  EXPECT_EQ(half->eval(Rational(3)), Rational(3, 2));

  auto cantor = apsidon::parse_mapping_spec("cantor");
  ASSERT_TRUE(cantor.has_value());
  EXPECT_EQ(cantor->eval(Rational(1, 3)), Rational(1, 2));

  EXPECT_FALSE(apsidon::parse_mapping_spec("").has_value());
  EXPECT_FALSE(apsidon::parse_mapping_spec("affine:1").has_value());
  EXPECT_FALSE(apsidon::parse_mapping_spec("affine:1,2,3").has_value());
  EXPECT_FALSE(apsidon::parse_mapping_spec("poly:").has_value());
  EXPECT_FALSE(apsidon::parse_mapping_spec("poly:1,x").has_value());
  EXPECT_FALSE(apsidon::parse_mapping_spec("spline:1,2").has_value());
}
