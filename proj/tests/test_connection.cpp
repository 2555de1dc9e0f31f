#include <gtest/gtest.h>

#include <random>

#include "hyp3f2/connection.hpp"

using namespace hyp3f2;

namespace {

RationalFunction sym(int i) { return RationalFunction::symbol(i); }

ShiftVector random_shift(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return {d(rng), d(rng), d(rng), d(rng), d(rng)};
}

}  // namespace

TEST(LatticePath, Canonical) {
  EXPECT_TRUE(lattice_path(ShiftVector{}).empty());
  const LatticePath w = lattice_path({1, 1, 1, 2, 1});
  const LatticePath want = {{0, Sign::Plus}, {1, Sign::Plus}, {2, Sign::Plus},
                            {3, Sign::Plus}, {3, Sign::Plus}, {4, Sign::Plus}};
  EXPECT_EQ(w, want);
  EXPECT_EQ(path_end(lattice_path({-2, 0, 3, 1, -1})), (ShiftVector{-2, 0, 3, 1, -1}));
}

TEST(Connection, SmallCases) {
  EXPECT_TRUE(matrix_equal(connection_matrix(ShiftVector{}), identity2<RationalFunction>()));
  EXPECT_TRUE(matrix_equal(connection_matrix(ShiftVector::unit(0)), contiguous_matrix(0, Sign::Plus).mat));
  const auto [r1, r] = upper_row(ShiftVector::ones());
  EXPECT_TRUE(r1.is_zero());
  EXPECT_TRUE(rf_equal(r, RationalFunction(1)));
  const auto [e1, e] = upper_row(ShiftVector::unit(0));
  EXPECT_TRUE(rf_equal(e1, sym(0)));
  EXPECT_TRUE(rf_equal(e, RationalFunction(1)));
}

TEST(Connection, DeltaFormulaSmall) {
  EXPECT_TRUE(rf_equal(connection_det_formula(ShiftVector{}), RationalFunction(1)));
  EXPECT_TRUE(rf_equal(connection_det_formula(ShiftVector::unit(3)), contiguous_det(3, Sign::Plus)));
  EXPECT_TRUE(rf_equal(connection_det_formula(ShiftVector::unit(0)), contiguous_det(0, Sign::Plus)));
  for (int i = 0; i < 5; ++i) {
    EXPECT_TRUE(rf_equal(connection_det_formula(-1 * ShiftVector::unit(i)), contiguous_det(i, Sign::Minus)));
  }
}

TEST(Connection, OneTwoRelation) {
  const ShiftVector two = 2 * ShiftVector::ones();
  const ThreeTermRelation rel = three_term_coefficients(ShiftVector::ones(), two);
  const RationalFunction phi3(symbols::phi3()), psi(symbols::psi()), s(symbols::saalschutz());
  EXPECT_TRUE(rf_equal(rel.u, psi / phi3));
  EXPECT_TRUE(rf_equal(rel.v, (s - RationalFunction(2)) / phi3));
}

TEST(Connection, ContiguousRelation) {
  const ThreeTermRelation rel = three_term_coefficients(ShiftVector::unit(0), ShiftVector::ones());
  EXPECT_TRUE(rf_equal(rel.u, RationalFunction(1) / sym(0)));
  EXPECT_TRUE(rf_equal(rel.v, RationalFunction(-1) / sym(0)));
  EXPECT_THROW(three_term_coefficients(ShiftVector::ones(), ShiftVector::ones()), DegenerateShifts);
}

TEST(Connection, SwapSymmetry) {
  const ShiftVector p{1, 0, -1, 1, 0}, q{0, 1, 0, -1, 1};
  const ThreeTermRelation x = three_term_coefficients(p, q), y = three_term_coefficients(q, p);
  EXPECT_TRUE(rf_equal(x.u, y.v));
  EXPECT_TRUE(rf_equal(x.v, y.u));
}

TEST(Connection, ChainRule) {
  EXPECT_TRUE(verify_chain_rule(ShiftVector::unit(0), ShiftVector::unit(1)));
  EXPECT_TRUE(verify_chain_rule(ShiftVector{}, ShiftVector{1, 0, 0, 1, 0}));
  EXPECT_TRUE(verify_chain_rule(ShiftVector{1, 0, -1, 1, 0}, ShiftVector{0, 1, 0, -1, 1}));
}

TEST(Connection, PathIndependence) {
  std::mt19937 rng(5);
  for (int n = 0; n < 3; ++n) {
    const ShiftVector p = random_shift(rng, -2, 2);
    EXPECT_TRUE(matrix_equal(connection_matrix(p), connection_matrix_along(random_lattice_path(p, rng), symbolic_params())))
        << p;
  }
}

Params<Rational> rational_point() {
  Params<Rational> a;
  a << Rational(3, 7), Rational(5, 11), Rational(-2, 13), Rational(17, 19), Rational(29, 23);
  return a;
}

TEST(Connection, TranslationConsistency) {
  std::mt19937 rng(11);
  const Params<Rational> a = rational_point();
  for (int n = 0; n < 20; ++n) {
    const ShiftVector p = random_shift(rng, -3, 3), q = random_shift(rng, -3, 3);
    const auto lhs = connection_matrix(p + q, a);
    const auto rhs = mul2(connection_matrix(q, translate(a, p)), connection_matrix(p, a));
    EXPECT_TRUE(matrix_equal(lhs, rhs)) << p << " " << q;
  }
  const ShiftVector p{1, 0, -1, 0, 1}, q{0, 1, 1, -1, 0};
  const auto sa = symbolic_params();
  EXPECT_TRUE(matrix_equal(connection_matrix(p + q),
                           mul2(connection_matrix(q, translate(sa, p)), connection_matrix(p))));
}

TEST(Connection, ChainRuleRandom) {
  std::mt19937 rng(13);
  const Params<Rational> a = rational_point();
  for (int n = 0; n < 20; ++n) {
    const ShiftVector p = random_shift(rng, -3, 3), q = random_shift(rng, -3, 3);
    EXPECT_TRUE(verify_chain_rule(p, q, a)) << p << " " << q;
  }
}

TEST(Connection, DeltaExhaustive) {
  int checked = 0;
  for (int c0 = -2; c0 <= 2; ++c0)
    for (int c1 = -2; c1 <= 2; ++c1)
      for (int c2 = -2; c2 <= 2; ++c2)
        for (int c3 = -2; c3 <= 2; ++c3)
          for (int c4 = -2; c4 <= 2; ++c4) {
            const ShiftVector p{c0, c1, c2, c3, c4};
            if (p.l1_norm() > 2) continue;
            EXPECT_TRUE(rf_equal(det2(connection_matrix(p)), connection_det_formula(p))) << p;
            ++checked;
          }
  EXPECT_EQ(checked, 61);
}

TEST(Connection, DeltaAtRationalPoints) {
  std::mt19937 rng(17);
  const Params<Rational> a = rational_point();
  for (int n = 0; n < 30; ++n) {
    const ShiftVector p = random_shift(rng, -3, 3);
    EXPECT_EQ(det2(connection_matrix(p, a)), connection_det_formula(p, a)) << p;
  }
}
