#ifndef HYP3F2_POLYNOMIAL_HPP_
#define HYP3F2_POLYNOMIAL_HPP_

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyp3f2/rational.hpp"

namespace hyp3f2 {

/// Number of parameter symbols a0, a1, a2; a3 = b1, a4 = b2.
inline constexpr int kNumSymbols = 5;

using Exponents = std::array<int, kNumSymbols>;

/// Largest exponent of a single symbol representable in a monomial key.
inline constexpr int kMaxExponent = 4095;

/// Conversion of an exact rational into an evaluation scalar.
template <typename Scalar>
Scalar from_rational(const Rational& r) {
  return Scalar(r);
}
template <>
inline double from_rational<double>(const Rational& r) {
  return r.to_double();
}
template <>
inline std::complex<double> from_rational<std::complex<double>>(const Rational& r) {
  return {r.to_double(), 0.0};
}

/// Sparse polynomial in a0..a4 with exact rational coefficients.
///
/// Terms are kept sorted by exponent vector in lexicographic order (a0 most
/// significant) and no stored coefficient is zero.
class Polynomial {
 public:
  struct Term {
    std::uint64_t key;
    Rational coeff;
  };

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// The symbol a_i, i in 0..4.
  static Polynomial symbol(int i);
  static Polynomial monomial(const Exponents& e, const Rational& c = Rational(1));
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Polynomial from_terms(const std::vector<std::pair<Exponents, Rational>>& terms);

  static std::uint64_t pack(const Exponents& e);
  static Exponents unpack(std::uint64_t key);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }
  std::size_t size() const { return terms_.size(); }
  Rational constant_term() const;
  int total_degree() const;
  int degree(int var) const;

  /// Terms in ascending lexicographic order of exponent vectors.
  std::vector<std::pair<Exponents, Rational>> terms() const;
  const std::vector<Term>& raw_terms() const { return terms_; }
  /// Coefficient of the lexicographically largest monomial; zero for 0.
  Rational leading_coefficient() const;
  Rational coefficient(const Exponents& e) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  /// Total order used to sort factors deterministically.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  Polynomial pow(int n) const;

  /// Quotient q with q * d == *this, or nullopt when d does not divide exactly.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;

  /// Componentwise minimum exponent over all terms (the monomial content).
  Exponents monomial_gcd() const;
  /// Divides every term by x^e; e must divide every monomial.
  Polynomial divide_monomial(const Exponents& e) const;

  /// Splits *this = content * primitive where primitive has coprime integer
  /// coefficients and positive leading coefficient.
  std::pair<Rational, Polynomial> content_and_primitive() const;

  /// Substitutes a_i -> images[i] for all i.
  Polynomial substitute(const std::array<Polynomial, kNumSymbols>& images) const;
  /// Translation a_i -> a_i + shift[i].
  Polynomial shifted(const std::array<Rational, kNumSymbols>& shift) const;

  template <typename Scalar, typename Point>
  Scalar evaluate(const Point& point) const;

  /// Whether *this vanishes at a pseudo-random point of the hyperplane f = 0
  /// modulo a large prime; f must be of total degree 1. A false result proves
  /// f does not divide *this.
  bool may_be_divisible_by_linear(const Polynomial& f) const;

  /// Plain-text rendering, e.g. "a0^2*a1 - 3/2*a3 + 1".
  std::string str() const;
  std::size_t hash() const;

 private:
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}
  std::vector<Term> terms_;
};

template <typename Scalar, typename Point>
Scalar Polynomial::evaluate(const Point& point) const {
  if (terms_.empty()) return from_rational<Scalar>(Rational(0));
  std::array<std::vector<Scalar>, kNumSymbols> powers;
  for (int i = 0; i < kNumSymbols; ++i) {
    const int d = degree(i);
    powers[i].reserve(static_cast<std::size_t>(d) + 1);
    powers[i].push_back(from_rational<Scalar>(Rational(1)));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * Scalar(point[i]));
  }
  Scalar sum = from_rational<Scalar>(Rational(0));
  for (const Term& t : terms_) {
    const Exponents e = unpack(t.key);
    Scalar term = from_rational<Scalar>(t.coeff);
    for (int i = 0; i < kNumSymbols; ++i) {
      if (e[i] != 0) term = term * powers[i][static_cast<std::size_t>(e[i])];
    }
    sum = sum + term;
  }
  return sum;
}

/// Named polynomials in the parameter symbols.
namespace symbols {
Polynomial a(int i);
/// Elementary symmetric polynomials of the numerator parameters a0, a1, a2.
Polynomial phi1();
Polynomial phi2();
Polynomial phi3();
/// Saalschuetzian index s(a) = a3 + a4 - a0 - a1 - a2.
Polynomial saalschutz();
/// psi(a) = a3 a4 - phi2 - phi1 - 1.
Polynomial psi();
}  // namespace symbols

}  // namespace hyp3f2

#endif  // HYP3F2_POLYNOMIAL_HPP_
