#include <gtest/gtest.h>

#include <random>

#include "hyp3f2/rational_function.hpp"

using namespace hyp3f2;

namespace {

Polynomial random_poly(std::mt19937& rng, int terms, int maxdeg) {
  std::uniform_int_distribution<int> e(0, maxdeg);
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<std::pair<Exponents, Rational>> t;
  for (int k = 0; k < terms; ++k) {
    t.push_back({{e(rng), e(rng), e(rng), e(rng), e(rng)}, Rational(c(rng), 1 + (k % 3))});
  }
  return Polynomial::from_terms(t);
}

RationalFunction random_rf(std::mt19937& rng) {
  Polynomial den = random_poly(rng, 2, 1);
  if (den.is_zero()) den = Polynomial(1);
  return {random_poly(rng, 3, 2), den};
}

}  // namespace

TEST(Rational, ParseAndArithmetic) {
  EXPECT_EQ(Rational::parse("3/4") + Rational::parse("0.25"), Rational(1));
  EXPECT_EQ(Rational::parse("-1.5e1"), Rational(-15));
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_THROW(Rational(1) / Rational(0), DenominatorVanishes);
  EXPECT_EQ(Rational::from_double(0.5), Rational(1, 2));
}

TEST(GaussianRational, ParseAndDivide) {
  const auto z = GaussianRational::parse("0.3+0.1j");
  EXPECT_EQ(z.real(), Rational(3, 10));
  EXPECT_EQ(z.imag(), Rational(1, 10));
  EXPECT_EQ(z / z, GaussianRational(1));
  EXPECT_EQ(GaussianRational::parse("2j") * GaussianRational::parse("2j"), GaussianRational(-4));
}

TEST(Polynomial, Basics) {
  const Polynomial x = Polynomial::symbol(0), y = Polynomial::symbol(3);
  const Polynomial p = (x + y) * (x - y);
  EXPECT_EQ(p, x * x - y * y);
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_EQ(*p.divide_exact(x + y), x - y);
  EXPECT_FALSE((p + Polynomial(1)).divide_exact(x + y).has_value());
  EXPECT_EQ(symbols::phi1().str(), "a0 + a1 + a2");
}

TEST(Polynomial, RingAxioms) {
  std::mt19937 rng(7);
  for (int n = 0; n < 100; ++n) {
    const Polynomial p = random_poly(rng, 4, 3), q = random_poly(rng, 4, 3), r = random_poly(rng, 4, 3);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(RationalFunction, FieldAxioms) {
  std::mt19937 rng(11);
  for (int n = 0; n < 100; ++n) {
    const RationalFunction x = random_rf(rng), y = random_rf(rng), z = random_rf(rng);
    EXPECT_TRUE(rf_equal((x + y) + z, x + (y + z)));
    EXPECT_TRUE(rf_equal(x * (y + z), x * y + x * z));
    EXPECT_TRUE(rf_equal(x * y, y * x));
    if (!y.is_zero()) {
      EXPECT_TRUE(rf_equal((x / y) * y, x));
    }
  }
}

TEST(RationalFunction, EqualityIsEquivalence) {
  std::mt19937 rng(3);
  for (int n = 0; n < 50; ++n) {
    const RationalFunction x = random_rf(rng);
    const RationalFunction c = random_rf(rng);
    const RationalFunction y = c.is_zero() ? x : (x * c) / c;
    const RationalFunction z = (y + c) - c;
    EXPECT_TRUE(rf_equal(x, x));
    EXPECT_TRUE(rf_equal(x, y));
    EXPECT_TRUE(rf_equal(y, x));
    EXPECT_TRUE(rf_equal(y, z));
    EXPECT_TRUE(rf_equal(x, z));
  }
}

TEST(RationalFunction, CancelsCommonFactors) {
  const RationalFunction a0 = RationalFunction::symbol(0), a3 = RationalFunction::symbol(3);
  const RationalFunction r = (a0 - a3) * (a0 + RationalFunction(1)) / (a0 - a3);
  EXPECT_TRUE(r.is_polynomial());
  EXPECT_EQ(r.numerator(), Polynomial::symbol(0) + Polynomial(1));
  EXPECT_THROW(RationalFunction(1) / RationalFunction(0), DenominatorVanishes);
}

TEST(RationalFunction, Evaluate) {
  const RationalFunction a0 = RationalFunction::symbol(0), a1 = RationalFunction::symbol(1);
  const RationalFunction r = a0 / (a1 - RationalFunction(2));
  std::array<Rational, 5> pt{Rational(3), Rational(5), Rational(0), Rational(0), Rational(0)};
  EXPECT_EQ(r.evaluate<Rational>(pt), Rational(1));
  pt[1] = Rational(2);
  EXPECT_THROW(r.evaluate<Rational>(pt), DenominatorVanishes);
}

TEST(Pochhammer, Additivity) {
  const RationalFunction x = RationalFunction::symbol(0);
  for (int m = -3; m <= 3; ++m) {
    for (int n = -3; n <= 3; ++n) {
      const RationalFunction lhs = pochhammer(x, m + n);
      const RationalFunction rhs = pochhammer(x, m) * pochhammer(x + RationalFunction(m), n);
      EXPECT_TRUE(rf_equal(lhs, rhs)) << m << " " << n;
    }
  }
  EXPECT_EQ(pochhammer(Rational(3), -2), Rational(1, 2));
  EXPECT_THROW(pochhammer(Rational(1), -1), DenominatorVanishes);
}
