#ifndef HYP3F2_SCALAR_HPP_
#define HYP3F2_SCALAR_HPP_

#include <Eigen/Core>

#include "hyp3f2/rational.hpp"
#include "hyp3f2/rational_function.hpp"

namespace Eigen {

// Exact field types as Eigen scalars. None of them is treated as complex by
// Eigen: GaussianRational is only ever combined with +, -, *, /.
namespace hyp3f2_detail {
template <typename T>
struct ExactFieldTraits : GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline T epsilon() { return T(0); }
  static inline T dummy_precision() { return T(0); }
  static inline int digits10() { return 0; }
};
}  // namespace hyp3f2_detail

template <>
struct NumTraits<hyp3f2::Rational> : hyp3f2_detail::ExactFieldTraits<hyp3f2::Rational> {};
template <>
struct NumTraits<hyp3f2::GaussianRational> : hyp3f2_detail::ExactFieldTraits<hyp3f2::GaussianRational> {};
template <>
struct NumTraits<hyp3f2::RationalFunction> : hyp3f2_detail::ExactFieldTraits<hyp3f2::RationalFunction> {};

}  // namespace Eigen

namespace hyp3f2 {

/// 2x2 matrix over a field: contiguous, connection and principal-part matrices.
template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

/// Parameter vector (a0, a1, a2; a3, a4) = (a0, a1, a2; b1, b2).
template <typename Scalar>
using Params = Eigen::Matrix<Scalar, 5, 1>;

using SymbolicMatrix = Matrix2<RationalFunction>;

/// The generic point (a0, ..., a4) of Q(a).
inline Params<RationalFunction> symbolic_params() {
  Params<RationalFunction> a;
  for (int i = 0; i < 5; ++i) a[i] = RationalFunction::symbol(i);
  return a;
}

template <typename Scalar>
Matrix2<Scalar> identity2() {
  Matrix2<Scalar> m;
  m << Scalar(1), Scalar(0), Scalar(0), Scalar(1);
  return m;
}

template <typename Scalar>
Scalar det2(const Matrix2<Scalar>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

/// Inverse via the adjugate; throws DenominatorVanishes for singular input.
template <typename Scalar>
Matrix2<Scalar> inverse2(const Matrix2<Scalar>& m) {
  const Scalar d = det2(m);
  if (is_exact_zero(d)) throw DenominatorVanishes("singular 2x2 matrix");
  Matrix2<Scalar> inv;
  inv << m(1, 1) / d, -m(0, 1) / d, -m(1, 0) / d, m(0, 0) / d;
  return inv;
}

template <typename Scalar>
Matrix2<Scalar> mul2(const Matrix2<Scalar>& x, const Matrix2<Scalar>& y) {
  Matrix2<Scalar> r;
  r(0, 0) = x(0, 0) * y(0, 0) + x(0, 1) * y(1, 0);
  r(0, 1) = x(0, 0) * y(0, 1) + x(0, 1) * y(1, 1);
  r(1, 0) = x(1, 0) * y(0, 0) + x(1, 1) * y(1, 0);
  r(1, 1) = x(1, 0) * y(0, 1) + x(1, 1) * y(1, 1);
  return r;
}

/// Integer power, negative exponents through inverse2.
template <typename Scalar>
Matrix2<Scalar> pow2(const Matrix2<Scalar>& m, int n) {
  Matrix2<Scalar> base = n < 0 ? inverse2(m) : m;
  Matrix2<Scalar> result = identity2<Scalar>();
  for (int k = 0; k < (n < 0 ? -n : n); ++k) result = mul2(base, result);
  return result;
}

/// Entrywise exact equality; for RationalFunction this is rf_equal.
template <typename Scalar>
bool matrix_equal(const Matrix2<Scalar>& x, const Matrix2<Scalar>& y) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!(x(i, j) == y(i, j))) return false;
    }
  }
  return true;
}

}  // namespace hyp3f2

#endif  // HYP3F2_SCALAR_HPP_
