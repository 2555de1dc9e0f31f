#include "hyp3f2/principal.hpp"

#include <stdexcept>

namespace hyp3f2 {

PrincipalMatrix principal_matrix(int i) { return {principal_matrix(i, symbolic_params()), i}; }

RationalFunction principal_det(int i) { return principal_det_closed_form(i, symbolic_params()); }

SymbolicMatrix principal_product(const ShiftVector& p) {
  const auto a = symbolic_params();
  SymbolicMatrix m = identity2<RationalFunction>();
  for (int i = 0; i < 5; ++i) {
    if (p[i] != 0) m = mul2(pow2(principal_matrix(i, a), p[i]), m);
  }
  return m;
}

SymbolicMatrix hat_principal(int i) {
  return hat_principal(i, RationalFunction::symbol(3), RationalFunction::symbol(4));
}

namespace {

Rational max_abs_entry(const Matrix2<Rational>& m) {
  Rational best(0);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) best = std::max(best, abs(m(r, c)));
  }
  return best;
}

}  // namespace

LaurentReport verify_laurent_limit(const ShiftVector& p, const Params<Rational>& a,
                                   const std::vector<Rational>& t_values) {
  for (std::size_t k = 0; k < t_values.size(); ++k) {
    if (t_values[k].sign() <= 0 || (k > 0 && !(t_values[k - 1] < t_values[k]))) {
      throw std::invalid_argument("t values must be positive and increasing");
    }
  }
  const Matrix2<Rational> b = principal_product(p, a);
  LaurentReport report;
  report.t_values = t_values;
  for (const Rational& t : t_values) {
    Matrix2<Rational> at;
    try {
      at = connection_matrix(p, Params<Rational>(a * t));
    } catch (const DenominatorVanishes&) {
      throw SingularSpecialization("t*a is not generic for t = " + t.str());
    }
    const Rational scale = pow(t, p.saalschutz_index());
    Matrix2<Rational> e;
    e << at(0, 0) * scale - b(0, 0), at(0, 1) * t * scale - b(0, 1),
         at(1, 0) / t * scale - b(1, 0), at(1, 1) * scale - b(1, 1);
    report.errors.push_back(max_abs_entry(e));
  }
  report.passed = true;
  for (std::size_t k = 0; k + 1 < report.errors.size(); ++k) {
    const Rational& e0 = report.errors[k];
    const Rational& e1 = report.errors[k + 1];
    if (e0.is_zero()) {
      report.normalized_ratios.push_back(0.0);
      if (!e1.is_zero()) report.passed = false;
      continue;
    }
    const double ratio = (e1 / e0 * (t_values[k + 1] / t_values[k])).to_double();
    report.normalized_ratios.push_back(ratio);
    if (ratio > 1.5) report.passed = false;
  }
  return report;
}

}  // namespace hyp3f2
