#include <gtest/gtest.h>

#include "hyp3f2/render.hpp"

using namespace hyp3f2;

TEST(Render, PolynomialJsonOrder) {
  const Polynomial p = Polynomial::symbol(1) * Polynomial::symbol(1) + Polynomial::symbol(0) + Polynomial(Rational(3, 2));
  const Json j = to_json(p);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["coeff"], "3/2");
  EXPECT_EQ(j[0]["exp"], Json({0, 0, 0, 0, 0}));
  EXPECT_EQ(j[1]["exp"], Json({0, 2, 0, 0, 0}));
  EXPECT_EQ(j[2]["exp"], Json({1, 0, 0, 0, 0}));
}

TEST(Render, RelationJsonRoundTrip) {
  const ThreeTermRelation rel = three_term_coefficients(ShiftVector::unit(0), ShiftVector::ones());
  const Json j = to_json(rel);
  EXPECT_EQ(j["p"], Json({1, 0, 0, 0, 0}));
  EXPECT_EQ(j["q"], Json({1, 1, 1, 1, 1}));
  EXPECT_EQ(j.dump(), to_json(three_term_coefficients(ShiftVector::unit(0), ShiftVector::ones())).dump());
  EXPECT_TRUE(j["u"].contains("num"));
  EXPECT_TRUE(j["u"].contains("den"));
}

TEST(Render, Latex) {
  EXPECT_EQ(latex(Polynomial(Rational(0))), "0");
  const RationalFunction r = RationalFunction(1) / RationalFunction::symbol(0);
  EXPECT_NE(latex(r).find("\\frac"), std::string::npos);
  EXPECT_NE(latex(contiguous_matrix(0, Sign::Plus).mat).find("pmatrix"), std::string::npos);
}
