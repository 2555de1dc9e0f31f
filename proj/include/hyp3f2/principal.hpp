#ifndef HYP3F2_PRINCIPAL_HPP_
#define HYP3F2_PRINCIPAL_HPP_

#include <vector>

#include "hyp3f2/connection.hpp"

namespace hyp3f2 {

/// Principal part B_i(a) of the contiguous matrix A_i^+(a).
template <typename Scalar>
Matrix2<Scalar> principal_matrix(int i, const Params<Scalar>& a) {
  detail::check_index(i);
  const detail::Symmetric<Scalar> sym(a);
  const Scalar one(1);
  const Scalar& ai = a[i];
  Matrix2<Scalar> m;
  if (i <= 2) {
    const auto [j, k] = detail::complement(i);
    m << ai, one,
         sym.phi3 / sym.s, (a[j] * a[k] - (ai - a[3]) * (ai - a[4])) / sym.s;
  } else {
    auto over = [&](const Scalar& x) { return x / (ai - a[0]) / (ai - a[1]) / (ai - a[2]); };
    m << over(ai * ai - sym.phi1 * ai + sym.phi2), -over(sym.s),
         -over(sym.phi3), over(ai * sym.s);
  }
  return m;
}

template <typename Scalar>
Scalar principal_det_closed_form(int i, const Params<Scalar>& a) {
  detail::check_index(i);
  const Scalar s = saalschutz(a);
  const Scalar& ai = a[i];
  if (i <= 2) return -(ai * (ai - a[3]) * (ai - a[4])) / s;
  return s / (ai - a[0]) / (ai - a[1]) / (ai - a[2]);
}

struct PrincipalMatrix {
  SymbolicMatrix mat;
  int index;
};

PrincipalMatrix principal_matrix(int i);
RationalFunction principal_det(int i);

/// a0 a1 a2 s(a) prod (b_i - a_j) != 0.
template <typename Scalar>
bool is_good(const Params<Scalar>& a) {
  Scalar g = a[0] * a[1] * a[2] * saalschutz(a);
  for (int i = 3; i < 5; ++i) {
    for (int j = 0; j < 3; ++j) g = g * (a[i] - a[j]);
  }
  return !is_exact_zero(g);
}

/// B(a;p) = B_0^{p0} ... B_4^{p4}; the factors commute.
/// Throws SingularSpecialization at points that are not good.
template <typename Scalar>
Matrix2<Scalar> principal_product(const ShiftVector& p, const Params<Scalar>& a) {
  if (!is_good(a)) throw SingularSpecialization("principal parts are singular at this point");
  Matrix2<Scalar> m = identity2<Scalar>();
  for (int i = 0; i < 5; ++i) {
    if (p[i] != 0) m = mul2(pow2(principal_matrix(i, a), p[i]), m);
  }
  return m;
}

SymbolicMatrix principal_product(const ShiftVector& p);

/// Outcome of the finite-t check of t^{s(p)} D(t)^{-1} A(t a;p) D(t) = B(a;p) + O(1/t).
struct LaurentReport {
  bool passed = false;
  std::vector<Rational> t_values;
  /// max-entry norm of the error E(t) for each t.
  std::vector<Rational> errors;
  /// (E(t_{k+1}) / E(t_k)) * (t_{k+1} / t_k); close to 1 for order-1/t decay.
  std::vector<double> normalized_ratios;
};

/// Exact rational computation; t_values must be increasing and positive.
LaurentReport verify_laurent_limit(const ShiftVector& p, const Params<Rational>& a,
                                   const std::vector<Rational>& t_values);

/// Principal parts at a0 = a1 = a2 = 0, as functions of (a3, a4).
template <typename Scalar>
Matrix2<Scalar> hat_principal(int i, const Scalar& a3, const Scalar& a4) {
  detail::check_index(i);
  const Scalar zero(0), one(1);
  const Scalar sum = a3 + a4;
  Matrix2<Scalar> m;
  if (i <= 2) {
    m << zero, one, zero, -(a3 * a4) / sum;
  } else {
    const Scalar& ai = i == 3 ? a3 : a4;
    m << one / ai, -sum / (ai * ai * ai), zero, sum / (ai * ai);
  }
  return m;
}

SymbolicMatrix hat_principal(int i);

/// Product of hat matrices; p0, p1, p2 must be non-negative.
template <typename Scalar>
Matrix2<Scalar> hat_principal_product(const ShiftVector& p, const Scalar& a3, const Scalar& a4) {
  for (int i = 0; i < 3; ++i) {
    if (p[i] < 0) throw std::invalid_argument("hat principal product needs p0, p1, p2 >= 0");
  }
  if (is_exact_zero(a3) || is_exact_zero(a4) || is_exact_zero(Scalar(a3 + a4))) {
    throw SingularSpecialization("hat principal parts need a3, a4, a3 + a4 nonzero");
  }
  Matrix2<Scalar> m = identity2<Scalar>();
  for (int i = 0; i < 5; ++i) {
    if (p[i] != 0) m = mul2(pow2(hat_principal(i, a3, a4), p[i]), m);
  }
  return m;
}

}  // namespace hyp3f2

#endif  // HYP3F2_PRINCIPAL_HPP_
