#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyp3f2/numeric.hpp"

using namespace hyp3f2;

namespace {

ComplexParams cpoint(Complex a0, Complex a1, Complex a2, Complex b1, Complex b2) {
  ComplexParams a;
  a << a0, a1, a2, b1, b2;
  return a;
}

// Generic point well inside the convergence region.
ComplexParams generic_point() {
  return cpoint({0.31, 0.05}, {0.43, -0.02}, {0.57, 0.03}, {2.71, 0.04}, {3.12, -0.01});
}

}  // namespace

TEST(Gamma, KnownValues) {
  EXPECT_NEAR(std::abs(complex_gamma(1.0) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(complex_gamma(0.5) - std::sqrt(std::numbers::pi)), 0.0, 1e-13);
  const Complex z(3.7, 1.2);
  const Complex g = complex_gamma(z), g1 = complex_gamma(z + 1.0);
  EXPECT_LT(std::abs(g1 - z * g) / std::abs(g1), 1e-12);
  const Complex w(-2.3, 0.4);
  EXPECT_LT(std::abs(complex_gamma(w + 1.0) - w * complex_gamma(w)) / std::abs(complex_gamma(w + 1.0)), 1e-12);
  EXPECT_THROW(complex_gamma(-3.0), PoleOfGamma);
  EXPECT_THROW(complex_gamma(0.0), PoleOfGamma);
}

TEST(Series, TruncationSelfConsistent) {
  const ComplexParams a = cpoint(0.3, 0.4, 0.5, 2.3, 2.7);
  SeriesOptions opt;
  const SeriesValue x = hgf_unit(a, opt);
  opt.rel_tol = 1e-15;
  opt.iteration_cap *= 2;
  const SeriesValue y = hgf_unit(a, opt);
  EXPECT_LT(std::abs(x.value - y.value), 1e-8);
  EXPECT_LE(std::abs(x.value - y.value), x.error_estimate + y.error_estimate + 1e-15 * std::abs(y.value));
}

TEST(Series, TruncationRandomPoints) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> re(0.2, 0.8), im(-0.1, 0.1), b(3.2, 3.8);
  for (int n = 0; n < 20; ++n) {
    const ComplexParams a = cpoint({re(rng), im(rng)}, {re(rng), im(rng)}, {re(rng), im(rng)},
                                   {b(rng), im(rng)}, {b(rng), im(rng)});
    const SeriesValue x = hgf_unit(a);
    SeriesOptions opt;
    opt.iteration_cap *= 2;
    opt.rel_tol = 1e-15;
    const SeriesValue y = hgf_unit(a, opt);
    EXPECT_LE(std::abs(x.value - y.value), x.error_estimate + 1e-15 * std::abs(y.value));
  }
}

TEST(Series, Errors) {
  EXPECT_THROW(hgf_unit(cpoint(0.3, 0.4, 0.5, 0.7, 0.8)), NonGenericPoint);
  EXPECT_THROW(hgf_unit(cpoint(-2.0, 0.4, 0.5, 3.7, 3.8)), PoleOfGamma);
  SeriesOptions opt;
  opt.iteration_cap = 10;
  EXPECT_THROW(hgf_unit(cpoint(0.3, 0.4, 0.5, 2.3, 2.7), opt), SlowConvergence);
  EXPECT_THROW(check_generic(cpoint(1.0, 0.4, 0.5, 2.3, 2.7)), NonGenericPoint);
  EXPECT_THROW(check_generic(cpoint(0.3, 0.4, 0.5, 2.3, 2.75)), NonGenericPoint);
  EXPECT_NO_THROW(check_generic(generic_point()));
}

TEST(Series, ContiguityOfSeries) {
  const ComplexParams a = generic_point();
  const Complex h = hgf_unit(a).value;
  const Complex h1 = hgf_unit(translate(a, ShiftVector::ones())).value;
  for (int i = 0; i < 3; ++i) {
    const Complex hi = hgf_unit(translate(a, ShiftVector::unit(i))).value;
    EXPECT_LT(std::abs(hi - a[i] * h - h1) / std::abs(hi), 1e-8) << i;
  }
  for (int i = 3; i < 5; ++i) {
    const Complex hi = hgf_unit(translate(a, -1 * ShiftVector::unit(i))).value;
    EXPECT_LT(std::abs(hi - (a[i] - 1.0) * h - h1) / std::abs(hi), 1e-8) << i;
  }
}

TEST(Series, OneTwoRelation) {
  const ComplexParams a = cpoint(0.3, 0.4, 0.5, 2.3, 2.7);
  const Complex phi1 = a[0] + a[1] + a[2], phi2 = a[0] * a[1] + a[1] * a[2] + a[2] * a[0];
  const Complex phi3 = a[0] * a[1] * a[2], s = a[3] + a[4] - phi1;
  const Complex psi = a[3] * a[4] - phi2 - phi1 - 1.0;
  // s(a + 2) = 1.8 sits below the default margin.
  SeriesOptions opt;
  opt.sigma_min = 1.5;
  opt.rel_tol = 1e-11;
  const Complex h = hgf_unit(a, opt).value;
  const Complex h1 = hgf_unit(translate(a, ShiftVector::ones()), opt).value;
  const Complex h2 = hgf_unit(translate(a, 2 * ShiftVector::ones()), opt).value;
  EXPECT_LT(std::abs(phi3 * h - psi * h1 - (s - 2.0) * h2), 1e-8 * std::abs(phi3 * h));
}

TEST(Companions, Definitions) {
  const ComplexParams a = generic_point();
  EXPECT_EQ(companion({0, Branch::Zero}, a), hgf_unit(a).value);
  EXPECT_EQ(companion({1, Branch::Zero}, a), hgf_unit(apply_involution(Involution::Tau1, a)).value);
  EXPECT_EQ(companion_name({2, Branch::Infinity}), "y_2^{(inf)}");
}

TEST(ThreeTerm, SimultaneousSmallRelations) {
  const ComplexParams a = generic_point();
  for (const auto& [p, q] : {std::pair{ShiftVector::ones(), 2 * ShiftVector::ones()},
                             std::pair{ShiftVector::unit(0), ShiftVector::ones()}}) {
    const ResidualReport r = verify_three_term(three_term_coefficients(p, q), a);
    for (const Residual& x : r) EXPECT_LT(x.residual, 1e-8) << companion_name(x.id);
  }
}

TEST(ThreeTerm, ExactRouteAgrees) {
  Params<GaussianRational> a;
  a << GaussianRational::parse("0.31+0.05j"), GaussianRational::parse("0.43-0.02j"),
      GaussianRational::parse("0.57+0.03j"), GaussianRational::parse("3.71+0.04j"),
      GaussianRational::parse("4.12-0.01j");
  const ShiftVector p{1, 0, -1, 1, 0}, q{0, 1, 0, -1, 1};
  const ThreeTermRelation rel = three_term_coefficients(p, q);
  std::array<GaussianRational, 5> pt;
  for (int i = 0; i < 5; ++i) pt[static_cast<std::size_t>(i)] = a[i];
  const auto [u, v] = three_term_coefficients_at(p, q, a);
  EXPECT_EQ(rel.u.evaluate<GaussianRational>(pt), u);
  EXPECT_EQ(rel.v.evaluate<GaussianRational>(pt), v);
  EXPECT_LT(max_residual(verify_three_term(p, q, a)), 1e-8);
  EXPECT_LT(max_residual(verify_three_term(rel, to_complex(a))), 1e-8);
}

TEST(Thomae, BothIndices) {
  const ComplexParams a = generic_point();
  EXPECT_LT(verify_thomae(a, 1), 1e-8);
  EXPECT_LT(verify_thomae(a, 2), 1e-8);
}

TEST(TrigRelation, ResidualAndPeriodicity) {
  const ComplexParams a = generic_point();
  EXPECT_LT(verify_trig_relation(a), 1e-8);
  EXPECT_LT(verify_trig_relation(a, {2, 0, 0, 0, 0}), 1e-8);
  const auto c = trig_coefficients(a), c2 = trig_coefficients(translate(a, ShiftVector{2, 0, 0, 0, 0}));
  for (int i = 0; i < 3; ++i) EXPECT_LT(std::abs(c[i] - c2[i]), 1e-12 * std::abs(c[i]));
  EXPECT_THROW(trig_c(cpoint(0.3, 0.4, 0.5, 2.0, 2.7)), TrigPole);
}
