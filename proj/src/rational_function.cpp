#include "hyp3f2/rational_function.hpp"

#include <algorithm>
#include <sstream>

namespace hyp3f2 {

namespace {

using Factor = RationalFunction::Factor;

bool divides(const Polynomial& f, const Polynomial& num, Polynomial* quotient) {
  if (f.total_degree() == 1 && !num.may_be_divisible_by_linear(f)) return false;
  auto q = num.divide_exact(f);
  if (!q) return false;
  *quotient = std::move(*q);
  return true;
}

// Cancels factors of `den` against `num` in place.
void cancel(std::vector<Factor>& den, Polynomial& num) {
  if (num.is_zero()) {
    den.clear();
    return;
  }
  for (Factor& f : den) {
    Polynomial q;
    while (f.multiplicity > 0 && divides(f.poly, num, &q)) {
      num = std::move(q);
      --f.multiplicity;
    }
  }
  den.erase(std::remove_if(den.begin(), den.end(), [](const Factor& f) { return f.multiplicity == 0; }),
            den.end());
}

// Union of two sorted factor lists; `take_max` selects lcm, otherwise product.
std::vector<Factor> merge_factors(const std::vector<Factor>& a, const std::vector<Factor>& b, bool take_max) {
  std::vector<Factor> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].poly < b[j].poly)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].poly < a[i].poly) {
      out.push_back(b[j++]);
    } else {
      const int m = take_max ? std::max(a[i].multiplicity, b[j].multiplicity)
                             : a[i].multiplicity + b[j].multiplicity;
      out.push_back({a[i].poly, m});
      ++i;
      ++j;
    }
  }
  return out;
}

int multiplicity_of(const std::vector<Factor>& factors, const Polynomial& p) {
  auto it = std::lower_bound(factors.begin(), factors.end(), p,
                             [](const Factor& f, const Polynomial& q) { return f.poly < q; });
  if (it != factors.end() && it->poly == p) return it->multiplicity;
  return 0;
}

// Product of lcm / den over the factors of lcm.
Polynomial cofactor(const std::vector<Factor>& lcm, const std::vector<Factor>& den) {
  Polynomial c(1);
  for (const Factor& f : lcm) {
    const int extra = f.multiplicity - multiplicity_of(den, f.poly);
    if (extra > 0) c *= f.poly.pow(extra);
  }
  return c;
}

}  // namespace

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num) {
  if (den.is_zero()) throw DenominatorVanishes("rational function with zero denominator");
  absorb_denominator(den, 1);
  reduce();
}

void RationalFunction::absorb_denominator(const Polynomial& poly, int multiplicity) {
  if (poly.is_zero()) throw DenominatorVanishes("division by the zero polynomial");
  auto [content, primitive] = poly.content_and_primitive();
  num_ *= Rational(1) / pow(content, multiplicity);
  std::vector<Factor> extra;
  const Exponents mono = primitive.monomial_gcd();
  for (int i = 0; i < kNumSymbols; ++i) {
    if (mono[i] > 0) extra.push_back({Polynomial::symbol(i), mono[i] * multiplicity});
  }
  Polynomial rest = primitive.divide_monomial(mono);
  if (!rest.is_constant()) {
    extra.push_back({rest, multiplicity});
  } else {
    num_ *= Rational(1) / pow(rest.constant_term(), multiplicity);
  }
  std::sort(extra.begin(), extra.end(), [](const Factor& x, const Factor& y) { return x.poly < y.poly; });
  den_ = merge_factors(den_, extra, false);
}

void RationalFunction::reduce() { cancel(den_, num_); }

Polynomial RationalFunction::denominator() const {
  Polynomial d(1);
  for (const Factor& f : den_) d *= f.poly.pow(f.multiplicity);
  return d;
}

std::size_t RationalFunction::size() const {
  std::size_t n = num_.size();
  for (const Factor& f : den_) n += f.poly.size();
  return n;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.empty() && o.den_.empty()) {
    num_ += o.num_;
    return *this;
  }
  std::vector<Factor> lcm = merge_factors(den_, o.den_, true);
  Polynomial n = num_ * cofactor(lcm, den_) + o.num_ * cofactor(lcm, o.den_);
  num_ = std::move(n);
  den_ = std::move(lcm);
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction();
  Polynomial other_num = o.num_;
  std::vector<Factor> other_den = o.den_;
  cancel(den_, other_num);
  cancel(other_den, num_);
  num_ = num_ * other_num;
  den_ = merge_factors(den_, other_den, false);
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DenominatorVanishes("inverse of zero rational function");
  RationalFunction r(denominator());
  r.absorb_denominator(num_, 1);
  r.reduce();
  return r;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_.empty() && b.den_.empty()) return a.num_ == b.num_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const std::vector<Factor> lcm = merge_factors(a.den_, b.den_, true);
  return a.num_ * cofactor(lcm, a.den_) == b.num_ * cofactor(lcm, b.den_);
}

bool rf_equal(const RationalFunction& x, const RationalFunction& y) { return x == y; }

RationalFunction RationalFunction::substitute(const std::array<Polynomial, kNumSymbols>& images) const {
  RationalFunction r(num_.substitute(images));
  for (const Factor& f : den_) r.absorb_denominator(f.poly.substitute(images), f.multiplicity);
  r.reduce();
  return r;
}

RationalFunction RationalFunction::shifted(const std::array<Rational, kNumSymbols>& shift) const {
  RationalFunction r(num_.shifted(shift));
  for (const Factor& f : den_) r.absorb_denominator(f.poly.shifted(shift), f.multiplicity);
  r.reduce();
  return r;
}

std::string RationalFunction::str() const {
  if (den_.empty()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ")/(";
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (i > 0) os << "*";
    os << "(" << den_[i].poly.str() << ")";
    if (den_[i].multiplicity > 1) os << "^" << den_[i].multiplicity;
  }
  os << ")";
  return os.str();
}

RationalFunction pochhammer_symbolic(const Polynomial& x, int n) {
  return pochhammer<RationalFunction>(RationalFunction(x), n);
}

}  // namespace hyp3f2
