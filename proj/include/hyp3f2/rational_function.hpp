#ifndef HYP3F2_RATIONAL_FUNCTION_HPP_
#define HYP3F2_RATIONAL_FUNCTION_HPP_

#include <string>
#include <type_traits>
#include <vector>

#include "hyp3f2/errors.hpp"
#include "hyp3f2/polynomial.hpp"

namespace hyp3f2 {

/// Exact zero test usable with every scalar type of the library.
template <typename T>
bool is_exact_zero(const T& x) {
  if constexpr (requires { x.is_zero(); }) {
    return x.is_zero();
  } else {
    return x == T(0);
  }
}

/// Element of Q(a0, ..., a4), stored as numerator / product of factors.
///
/// The denominator is kept as a sorted list of canonical factors (primitive,
/// positive leading coefficient; monomials split into single symbols). Values
/// are not reduced to lowest terms: only factors that are seen to divide the
/// numerator are cancelled. Equality is decided by cross-multiplication.
class RationalFunction {
 public:
  struct Factor {
    Polynomial poly;
    int multiplicity;
  };

  RationalFunction() = default;
  RationalFunction(const Polynomial& num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(int c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  /// num / den; throws DenominatorVanishes when den is the zero polynomial.
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction symbol(int i) { return {Polynomial::symbol(i)}; }

  const Polynomial& numerator() const { return num_; }
  /// The expanded denominator polynomial.
  Polynomial denominator() const;
  const std::vector<Factor>& denominator_factors() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  /// Number of numerator terms plus denominator-factor terms; a size measure.
  std::size_t size() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  /// Same element of Q(a).
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// 1 / *this; throws DenominatorVanishes when *this is zero.
  RationalFunction inverse() const;

  /// Value at a point; throws DenominatorVanishes if a denominator factor vanishes.
  template <typename Scalar, typename Point>
  Scalar evaluate(const Point& point) const;

  RationalFunction substitute(const std::array<Polynomial, kNumSymbols>& images) const;
  RationalFunction shifted(const std::array<Rational, kNumSymbols>& shift) const;

  /// "num" or "(num)/((f1)*(f2)^2)".
  std::string str() const;

 private:
  // Multiplies the denominator by poly^multiplicity, splitting off content and monomials.
  void absorb_denominator(const Polynomial& poly, int multiplicity);
  // Cancels denominator factors that divide the numerator.
  void reduce();

  Polynomial num_;
  std::vector<Factor> den_;
};

bool rf_equal(const RationalFunction& x, const RationalFunction& y);

/// Rising factorial (x, n) = Gamma(x + n) / Gamma(x) for any integer n:
/// x (x + 1) ... (x + n - 1) for n >= 0 and 1 / ((x - 1) ... (x - |n|)) for n < 0.
template <typename Scalar>
Scalar pochhammer(const Scalar& x, int n) {
  Scalar result(1);
  if (n >= 0) {
    for (int k = 0; k < n; ++k) result = result * (x + Scalar(k));
  } else {
    for (int k = 1; k <= -n; ++k) {
      const Scalar d = x - Scalar(k);
      if (is_exact_zero(d)) throw DenominatorVanishes("pochhammer pole");
      result = result / d;
    }
  }
  return result;
}

RationalFunction pochhammer_symbolic(const Polynomial& x, int n);

template <typename Scalar, typename Point>
Scalar RationalFunction::evaluate(const Point& point) const {
  Scalar den = from_rational<Scalar>(Rational(1));
  for (const Factor& f : den_) {
    const Scalar v = f.poly.template evaluate<Scalar>(point);
    if (is_exact_zero(v)) throw DenominatorVanishes("denominator vanishes at point");
    for (int k = 0; k < f.multiplicity; ++k) den = den * v;
  }
  return num_.template evaluate<Scalar>(point) / den;
}

}  // namespace hyp3f2

#endif  // HYP3F2_RATIONAL_FUNCTION_HPP_
