#ifndef HYP3F2_RATIONAL_HPP_
#define HYP3F2_RATIONAL_HPP_

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace hyp3f2 {

/// Arbitrary-precision rational number.
///
/// Thin value wrapper over mpq_class whose operators return concrete values
/// (not GMP expression templates), so it composes with Eigen and generic code.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(mpq_class&& q) : q_(std::move(q)) { q_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "n", "n/d", or a finite decimal such as "-0.375" or "1e-3", exactly.
  static Rational parse(std::string_view text);
  /// Exact rational value of a finite double.
  static Rational from_double(double v);

  const mpq_class& mpq() const { return q_; }
  mpq_class& mpq() { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }
  /// "n" or "n/d" with an explicit leading '-' for negatives.
  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);
/// r^n for any integer n; throws DenominatorVanishes for 0^n with n < 0.
Rational pow(const Rational& r, long n);

/// Exact complex rational x + i y; the scalar for exact evaluation at complex points.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  /// Parses "x", "x+yj", "x-yj", "yj" with decimal or n/d components.
  static GaussianRational parse(std::string_view text);

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  std::string str() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

 private:
  Rational re_;
  Rational im_;
};

}  // namespace hyp3f2

#endif  // HYP3F2_RATIONAL_HPP_
