#include "hyp3f2/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "hyp3f2/errors.hpp"

namespace hyp3f2 {

Rational::Rational(long num, long den) {
  if (den == 0) throw DenominatorVanishes("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DenominatorVanishes("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DenominatorVanishes("division by zero rational");
  q_ /= o.q_;
  return *this;
}

namespace {

mpz_class parse_integer(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed integer literal");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw std::invalid_argument("malformed integer literal: " + std::string(s));
    }
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return mpz_class(digits, 10);
}

Rational parse_decimal(std::string_view s) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    exponent = parse_integer(s.substr(e + 1)).get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '+' || mantissa[0] == '-')) {
    negative = mantissa[0] == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("malformed decimal: " + std::string(s));
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw std::invalid_argument("malformed decimal: " + std::string(s));
    }
  }
  if (digits.empty()) throw std::invalid_argument("malformed decimal: " + std::string(s));
  mpz_class num(digits, 10);
  if (negative) num = -num;
  const long scale = exponent - frac_digits;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale >= 0) return Rational(mpz_class(num * ten_pow), mpz_class(1));
  return Rational(num, ten_pow);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
  }
  return parse_decimal(text);
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite double");
  return Rational(mpq_class(v));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long n) {
  if (n < 0) {
    if (r.is_zero()) throw DenominatorVanishes("zero to a negative power");
    return Rational(1) / pow(r, -n);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.mpq().get_num_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), r.mpq().get_den_mpz_t(), static_cast<unsigned long>(n));
  return Rational(num, den);
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'j' && s.back() != 'i') return {Rational::parse(s), Rational(0)};
  s.pop_back();
  // Split at the last sign that is not part of an exponent and not leading.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [](const std::string& t) {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    return Rational::parse(t);
  };
  if (split == std::string::npos) return {Rational(0), imag_part(s)};
  return {Rational::parse(s.substr(0, split)), imag_part(s.substr(split))};
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string out = re_.str();
  out += im_.sign() < 0 ? "-" : "+";
  out += abs(im_).str();
  out += "j";
  return out;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DenominatorVanishes("division by zero complex rational");
  const Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
  Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

}  // namespace hyp3f2
