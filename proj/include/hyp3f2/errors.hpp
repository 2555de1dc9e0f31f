#ifndef HYP3F2_ERRORS_HPP_
#define HYP3F2_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hyp3f2 {

// A denominator evaluated to zero at a point.
class DenominatorVanishes : public std::domain_error {
 public:
  explicit DenominatorVanishes(const std::string& what = "denominator vanishes")
      : std::domain_error(what) {}
};

class DegenerateShifts : public std::invalid_argument {
 public:
  explicit DegenerateShifts(const std::string& what = "shift vectors p and q coincide")
      : std::invalid_argument(what) {}
};

// Evaluation point violates a0 a1 a2 s(a) prod(b_i - a_j) != 0.
class SingularSpecialization : public std::domain_error {
 public:
  explicit SingularSpecialization(const std::string& what = "specialization is not good")
      : std::domain_error(what) {}
};

class PoleOfGamma : public std::domain_error {
 public:
  explicit PoleOfGamma(const std::string& what = "gamma function pole")
      : std::domain_error(what) {}
};

class SlowConvergence : public std::runtime_error {
 public:
  explicit SlowConvergence(const std::string& what = "series did not converge within the iteration cap")
      : std::runtime_error(what) {}
};

// Parameter point fails the genericness or convergence-margin precondition.
class NonGenericPoint : public std::domain_error {
 public:
  explicit NonGenericPoint(const std::string& what) : std::domain_error(what) {}
};

class CoefficientPole : public std::domain_error {
 public:
  explicit CoefficientPole(const std::string& what = "relation coefficient has a pole at the point")
      : std::domain_error(what) {}
};

class TrigPole : public std::domain_error {
 public:
  explicit TrigPole(const std::string& what = "sine denominator vanishes")
      : std::domain_error(what) {}
};

class ClosureOverflow : public std::logic_error {
 public:
  explicit ClosureOverflow(const std::string& what = "group closure exceeded safety bound")
      : std::logic_error(what) {}
};

}  // namespace hyp3f2

#endif  // HYP3F2_ERRORS_HPP_
