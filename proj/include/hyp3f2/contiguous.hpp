#ifndef HYP3F2_CONTIGUOUS_HPP_
#define HYP3F2_CONTIGUOUS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

#include "hyp3f2/involutions.hpp"
#include "hyp3f2/scalar.hpp"
#include "hyp3f2/shift_vector.hpp"

namespace hyp3f2 {

enum class Sign { Plus, Minus };

inline int sign_value(Sign e) { return e == Sign::Plus ? 1 : -1; }
inline Sign opposite(Sign e) { return e == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign e) { return e == Sign::Plus ? '+' : '-'; }

/// One unit step eps * e_i of a lattice path.
struct Step {
  int index;
  Sign sign;
  friend bool operator==(const Step&, const Step&) = default;
};

namespace detail {

inline void check_index(int i) {
  if (i < 0 || i > 4) throw std::out_of_range("contiguous direction must be in 0..4");
}

// The two numerator indices other than i, for i in 0..2.
inline std::pair<int, int> complement(int i) {
  switch (i) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

template <typename Scalar>
struct Symmetric {
  Scalar phi1, phi2, phi3, s;
  explicit Symmetric(const Params<Scalar>& a)
      : phi1(a[0] + a[1] + a[2]),
        phi2(a[0] * a[1] + a[1] * a[2] + a[2] * a[0]),
        phi3(a[0] * a[1] * a[2]),
        s(saalschutz(a)) {}
};

}  // namespace detail

/// Contiguous matrix A_i^eps(a): (h(a + eps e_i), h(a + eps e_i + 1)) = A (h(a), h(a + 1)).
template <typename Scalar>
Matrix2<Scalar> contiguous_matrix(int i, Sign e, const Params<Scalar>& a) {
  detail::check_index(i);
  const detail::Symmetric<Scalar> sym(a);
  const Scalar one(1), two(2);
  const Scalar& ai = a[i];
  Matrix2<Scalar> m;
  if (i <= 2 && e == Sign::Plus) {
    const auto [j, k] = detail::complement(i);
    const Scalar d = sym.s - two;
    m << ai, one,
         sym.phi3 / d, (a[j] * a[k] - (ai - a[3] + one) * (ai - a[4] + one)) / d;
  } else if (i >= 3 && e == Sign::Plus) {
    const Scalar s1 = sym.s - one;
    auto over = [&](const Scalar& x) { return x / (ai - a[0]) / (ai - a[1]) / (ai - a[2]); };
    m << over(ai * ai - sym.phi1 * ai + sym.phi2), -over(s1),
         -over(sym.phi3), over(ai * s1);
  } else if (i <= 2) {
    const auto [j, k] = detail::complement(i);
    const Scalar s1 = sym.s - one;
    const Scalar ajk = a[j] * a[k];
    auto over2 = [&](const Scalar& x) { return x / (ai - a[3]) / (ai - a[4]); };
    m << over2((ai - a[3]) * (ai - a[4]) - ajk) / (ai - one), over2(s1) / (ai - one),
         over2(ajk), -over2(s1);
  } else {
    const Scalar d = sym.s - two;
    const Scalar am1 = ai - one;
    m << am1, one,
         sym.phi3 / d, (am1 * am1 - sym.phi1 * am1 + sym.phi2) / d;
  }
  return m;
}

/// Closed-form determinant of A_i^eps(a).
template <typename Scalar>
Scalar contiguous_det_closed_form(int i, Sign e, const Params<Scalar>& a) {
  detail::check_index(i);
  const Scalar one(1), two(2);
  const Scalar s = saalschutz(a);
  const Scalar& ai = a[i];
  if (i <= 2 && e == Sign::Plus) {
    return -(ai * (ai - a[3] + one) * (ai - a[4] + one)) / (s - two);
  }
  if (i >= 3 && e == Sign::Plus) {
    return (s - one) / (ai - a[0]) / (ai - a[1]) / (ai - a[2]);
  }
  if (i <= 2) {
    return -(s - one) / (ai - one) / (ai - a[3]) / (ai - a[4]);
  }
  return (ai - a[0] - one) * (ai - a[1] - one) * (ai - a[2] - one) / (s - two);
}

/// Symbolic contiguous matrix together with its direction.
struct ContiguousMatrix {
  SymbolicMatrix mat;
  int direction;
  Sign sign;
};

ContiguousMatrix contiguous_matrix(int i, Sign e);
RationalFunction contiguous_det(int i, Sign e);

/// A_i^ei(a + ej e_j) A_j^ej(a) == A_j^ej(a + ei e_i) A_i^ei(a) at the given point.
template <typename Scalar>
bool check_compatibility_at(int i, int j, Sign ei, Sign ej, const Params<Scalar>& a) {
  const ShiftVector step_i = sign_value(ei) * ShiftVector::unit(i);
  const ShiftVector step_j = sign_value(ej) * ShiftVector::unit(j);
  const Matrix2<Scalar> lhs = mul2(contiguous_matrix(i, ei, translate(a, step_j)), contiguous_matrix(j, ej, a));
  const Matrix2<Scalar> rhs = mul2(contiguous_matrix(j, ej, translate(a, step_i)), contiguous_matrix(i, ei, a));
  return matrix_equal(lhs, rhs);
}

/// Symbolic compatibility check over Q(a).
bool check_compatibility(int i, int j, Sign ei, Sign ej);

/// A_i^eps(a) A_i^{-eps}(a + eps e_i) == identity, symbolically.
bool check_inverse_relation(int i, Sign e);

}  // namespace hyp3f2

#endif  // HYP3F2_CONTIGUOUS_HPP_
