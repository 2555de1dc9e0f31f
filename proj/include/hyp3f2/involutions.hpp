#ifndef HYP3F2_INVOLUTIONS_HPP_
#define HYP3F2_INVOLUTIONS_HPP_

#include <array>
#include <string>

#include "hyp3f2/scalar.hpp"

namespace hyp3f2 {

/// The six parameter involutions: identity, tau1, tau2 (the z = 0 family)
/// and sigma0, sigma1, sigma2 (the z = infinity family).
enum class Involution { Identity, Tau1, Tau2, Sigma0, Sigma1, Sigma2 };

inline constexpr std::array<Involution, 6> kAllInvolutions = {
    Involution::Identity, Involution::Tau1,   Involution::Tau2,
    Involution::Sigma0,   Involution::Sigma1, Involution::Sigma2};

std::string involution_name(Involution s);

/// Image of a = (a0, a1, a2; b1, b2) under the involution.
template <typename Scalar>
Params<Scalar> apply_involution(Involution s, const Params<Scalar>& a) {
  const Scalar one(1), two(2);
  const Scalar &a0 = a[0], &a1 = a[1], &a2 = a[2], &b1 = a[3], &b2 = a[4];
  Params<Scalar> r;
  switch (s) {
    case Involution::Identity:
      r = a;
      break;
    case Involution::Tau1:
      r << a0 + one - b1, a1 + one - b1, a2 + one - b1, two - b1, b2 + one - b1;
      break;
    case Involution::Tau2:
      r << a0 + one - b2, a1 + one - b2, a2 + one - b2, b1 + one - b2, two - b2;
      break;
    case Involution::Sigma0:
      r << a0, a0 + one - b1, a0 + one - b2, a0 + one - a1, a0 + one - a2;
      break;
    case Involution::Sigma1:
      r << a1 + one - b1, a1, a1 + one - b2, a1 + one - a0, a1 + one - a2;
      break;
    case Involution::Sigma2:
      r << a2 + one - b2, a2 + one - b1, a2, a2 + one - a1, a2 + one - a0;
      break;
  }
  return r;
}

/// s(a) = b1 + b2 - a0 - a1 - a2 in the scalar field.
template <typename Scalar>
Scalar saalschutz(const Params<Scalar>& a) {
  return a[3] + a[4] - a[0] - a[1] - a[2];
}

}  // namespace hyp3f2

#endif  // HYP3F2_INVOLUTIONS_HPP_
