#ifndef HYP3F2_CONNECTION_HPP_
#define HYP3F2_CONNECTION_HPP_

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "hyp3f2/contiguous.hpp"
#include "hyp3f2/errors.hpp"

namespace hyp3f2 {

using LatticePath = std::vector<Step>;

/// Canonical path: all steps in coordinate 0, then 1, ..., then 4.
LatticePath lattice_path(const ShiftVector& p);

/// Path visiting coordinates in the given order (a permutation of 0..4).
LatticePath lattice_path(const ShiftVector& p, const std::array<int, 5>& order);

/// Uniformly shuffled admissible path from the origin to p.
template <typename Rng>
LatticePath random_lattice_path(const ShiftVector& p, Rng& rng) {
  LatticePath path = lattice_path(p);
  std::shuffle(path.begin(), path.end(), rng);
  return path;
}

/// End point of a path.
ShiftVector path_end(const LatticePath& path);

/// Ordered product A_{i_m}(a + p_{m-1}) ... A_{i_1}(a) along the path.
template <typename Scalar>
Matrix2<Scalar> connection_matrix_along(const LatticePath& path, const Params<Scalar>& a) {
  Matrix2<Scalar> m = identity2<Scalar>();
  Params<Scalar> at = a;
  bool first = true;
  for (const Step& st : path) {
    const Matrix2<Scalar> c = contiguous_matrix(st.index, st.sign, at);
    m = first ? c : mul2(c, m);
    first = false;
    at[st.index] = at[st.index] + Scalar(sign_value(st.sign));
  }
  return m;
}

template <typename Scalar>
Matrix2<Scalar> connection_matrix(const ShiftVector& p, const Params<Scalar>& a) {
  return connection_matrix_along(lattice_path(p), a);
}

SymbolicMatrix connection_matrix(const ShiftVector& p);

/// delta(a;p), the closed form of det A(a;p).
template <typename Scalar>
Scalar connection_det_formula(const ShiftVector& p, const Params<Scalar>& a) {
  const Scalar one(1);
  Scalar num = pochhammer(saalschutz(a) - one, p.saalschutz_index());
  for (int i = 0; i < 3; ++i) num = num * pochhammer(a[i], p[i]);
  if ((p[0] + p[1] + p[2]) % 2 != 0) num = -num;
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 5; ++j) num = num / pochhammer(Scalar(a[j] - a[i]), p[j] - p[i]);
  }
  return num;
}

RationalFunction connection_det_formula(const ShiftVector& p);

/// (r1, r): h(a + p) = r1 h(a) + r h(a + 1).
template <typename Scalar>
std::pair<Scalar, Scalar> upper_row(const ShiftVector& p, const Params<Scalar>& a) {
  const Matrix2<Scalar> m = connection_matrix(p, a);
  return {m(0, 0), m(0, 1)};
}

std::pair<RationalFunction, RationalFunction> upper_row(const ShiftVector& p);

/// h(a) = u h(a + p) + v h(a + q).
struct ThreeTermRelation {
  ShiftVector p;
  ShiftVector q;
  RationalFunction u;
  RationalFunction v;
};

/// u, v evaluated directly in the scalar field at a.
/// Throws DegenerateShifts for p == q and CoefficientPole if Delta vanishes at a.
template <typename Scalar>
std::pair<Scalar, Scalar> three_term_coefficients_at(const ShiftVector& p, const ShiftVector& q,
                                                     const Params<Scalar>& a) {
  if (p == q) throw DegenerateShifts("three-term relation needs p != q");
  const auto [r1p, rp] = upper_row(p, a);
  const auto [r1q, rq] = upper_row(q, a);
  const Scalar delta = r1p * rq - rp * r1q;
  if (is_exact_zero(delta)) throw CoefficientPole("determinant of the shift pair vanishes");
  return {rq / delta, -rp / delta};
}

/// Symbolic u, v over Q(a).
ThreeTermRelation three_term_coefficients(const ShiftVector& p, const ShiftVector& q);

/// Checks A(a;q) = A(a+p;q-p) A(a;p) and Delta(a;p,q) = delta(a;p) r(a+p;q-p) at a.
template <typename Scalar>
bool verify_chain_rule(const ShiftVector& p, const ShiftVector& q, const Params<Scalar>& a) {
  const Params<Scalar> ap = translate(a, p);
  const Matrix2<Scalar> ma_p = connection_matrix(p, a);
  const Matrix2<Scalar> ma_q = connection_matrix(q, a);
  const Matrix2<Scalar> step = connection_matrix(q - p, ap);
  if (!matrix_equal(ma_q, mul2(step, ma_p))) return false;
  const Scalar delta_pq = ma_p(0, 0) * ma_q(0, 1) - ma_p(0, 1) * ma_q(0, 0);
  const Scalar lemma = connection_det_formula(p, a) * step(0, 1);
  return delta_pq == lemma;
}

bool verify_chain_rule(const ShiftVector& p, const ShiftVector& q);

}  // namespace hyp3f2

#endif  // HYP3F2_CONNECTION_HPP_
