#ifndef HYP3F2_SYMMETRY_HPP_
#define HYP3F2_SYMMETRY_HPP_

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hyp3f2/connection.hpp"
#include "hyp3f2/involutions.hpp"

namespace hyp3f2 {

using Matrix5 = Eigen::Matrix<Rational, 5, 5>;

/// Exact affine map a -> L a + t on parameter space.
class AffineTransform {
 public:
  AffineTransform();
  AffineTransform(Matrix5 linear, Params<Rational> translation);

  static AffineTransform identity() { return {}; }
  static AffineTransform from_involution(Involution s);

  const Matrix5& linear() const { return linear_; }
  const Params<Rational>& translation() const { return translation_; }

  /// (*this)(other(a)).
  AffineTransform compose(const AffineTransform& other) const;
  AffineTransform inverse() const;
  Rational linear_determinant() const;
  bool is_identity() const;
  /// Whether the linear part has integer entries.
  bool is_integral() const;

  template <typename Scalar>
  Params<Scalar> apply(const Params<Scalar>& a) const {
    Params<Scalar> out;
    for (int i = 0; i < 5; ++i) {
      Scalar v = from_rational<Scalar>(translation_[i]);
      for (int j = 0; j < 5; ++j) {
        if (!linear_(i, j).is_zero()) v = v + from_rational<Scalar>(linear_(i, j)) * a[j];
      }
      out[i] = v;
    }
    return out;
  }

  /// Images of the symbols a_0..a_4, for polynomial substitution.
  std::array<Polynomial, kNumSymbols> polynomial_images() const;

  /// Action of the linear part on an integer shift.
  ShiftVector act(const ShiftVector& p) const;
  /// Action of the linear part on a real vector.
  Params<Rational> act_linear(const Params<Rational>& x) const;

  /// Key for ordering and deduplication (linear part and translation).
  std::vector<Rational> key() const;
  std::vector<Rational> linear_key() const;

  friend bool operator==(const AffineTransform& x, const AffineTransform& y) { return x.key() == y.key(); }
  friend AffineTransform operator*(const AffineTransform& x, const AffineTransform& y) { return x.compose(y); }

 private:
  Matrix5 linear_;
  Params<Rational> translation_;
};

/// Group element together with a word in the generators.
struct GroupElement {
  AffineTransform transform;
  /// Generator indices; the element is g[w0] o g[w1] o ... .
  std::vector<int> word;

  std::string word_str() const;
};

/// id, tau1, tau2, sigma0, sigma1, sigma2; index 3 is also written sigma3 := tau1 and sigma4 := tau2.
std::vector<AffineTransform> generators();
std::string generator_name(int index);

/// Breadth-first closure of the generators; throws ClosureOverflow beyond bound elements.
std::vector<GroupElement> enumerate_group(std::size_t bound = 1000);

/// Closure of a set of affine maps.
std::vector<AffineTransform> closure(const std::vector<AffineTransform>& gens, std::size_t bound = 1000);

/// rho_i = tau_i sigma0 tau_i sigma0 tau_i for i = 1, 2, and rho_3 = tau1 tau2 tau1.
AffineTransform rho(int i);

/// The point (2/3, 2/3, 2/3; 1, 1).
Params<Rational> fixed_point();

struct CheckItem {
  std::string name;
  bool passed;
  std::string detail;
};

/// Structural checks: order, involutions, s-invariance, fixed point, lattice, rho relations, product structure.
std::vector<CheckItem> group_check();

/// p0 >= p1 >= p2 and p4 >= p3 >= p0 - p1.
bool in_fundamental_domain(const ShiftVector& p);

/// Element mapping p into the fundamental domain; ties go to the lexicographically smallest image.
std::pair<GroupElement, ShiftVector> reduce_to_fundamental_domain(const ShiftVector& p);

/// +1 if the linear part preserves the u-subspace (even number of sigma0, sigma1, sigma2 in any word),
/// -1 if it swaps the u- and v-subspaces.
int swap_character(const AffineTransform& g);

/// u(a; g p, g q) == chi(g)^{s(p)} u(g^{-1} a; p, q) and v likewise with s(q), symbolically.
/// The sign comes from the phase exp(i pi s(a)) carried by the companions at infinity.
bool verify_covariance(const ShiftVector& p, const ShiftVector& q, const GroupElement& g);

/// The identity above without the sign; fails when chi(g) = -1 and s(p) or s(q) is odd.
bool verify_covariance_unsigned(const ShiftVector& p, const ShiftVector& q, const GroupElement& g);

/// Coefficients of a relation transported by g: w -> chi(g)^{s(shift)} w(g^{-1}(a)).
ThreeTermRelation transport_relation(const ThreeTermRelation& rel, const AffineTransform& g);

struct OrbitRelation {
  GroupElement element;
  ThreeTermRelation relation;
};

/// The relations obtained by acting with every group element, one per distinct (g p, g q).
std::vector<OrbitRelation> orbit_relations(const ShiftVector& p, const ShiftVector& q);

/// Same orbit starting from an already computed relation.
std::vector<OrbitRelation> orbit_relations(const ThreeTermRelation& rel);

}  // namespace hyp3f2

#endif  // HYP3F2_SYMMETRY_HPP_
