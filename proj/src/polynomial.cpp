#include "hyp3f2/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "hyp3f2/errors.hpp"

namespace hyp3f2 {

namespace {

constexpr int kFieldBits = 12;
constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kFieldBits) - 1;

constexpr int field_shift(int i) { return kFieldBits * (kNumSymbols - 1 - i); }

int field(std::uint64_t key, int i) {
  return static_cast<int>((key >> field_shift(i)) & kFieldMask);
}

// Every exponent of `big` is at least the corresponding exponent of `small`.
bool key_divides(std::uint64_t small, std::uint64_t big) {
  for (int i = 0; i < kNumSymbols; ++i) {
    if (field(small, i) > field(big, i)) return false;
  }
  return true;
}

std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b, bool subtract) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key < b[j].key)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].key < a[i].key) {
      out.push_back({b[j].key, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      Rational c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_degree_sum(const Polynomial& a, const Polynomial& b) {
  for (int i = 0; i < kNumSymbols; ++i) {
    if (a.degree(i) + b.degree(i) > kMaxExponent) {
      throw std::overflow_error("polynomial exponent overflow");
    }
  }
}

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t r = lo + hi;
  while (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

// Residue of a rational modulo kPrime; nullopt when the denominator is divisible by it.
std::optional<std::uint64_t> residue(const Rational& r) {
  const mpz_class& num = r.mpq().get_num();
  const mpz_class& den = r.mpq().get_den();
  std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), kPrime);
  std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), kPrime);
  if (d == 0) return std::nullopt;
  if (d == 1) return n;
  return mulmod(n, powmod(d, kPrime - 2));
}

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({0, c});
}

std::uint64_t Polynomial::pack(const Exponents& e) {
  std::uint64_t key = 0;
  for (int i = 0; i < kNumSymbols; ++i) {
    if (e[i] < 0 || e[i] > kMaxExponent) throw std::overflow_error("exponent out of range");
    key |= static_cast<std::uint64_t>(e[i]) << field_shift(i);
  }
  return key;
}

Exponents Polynomial::unpack(std::uint64_t key) {
  Exponents e{};
  for (int i = 0; i < kNumSymbols; ++i) e[i] = field(key, i);
  return e;
}

Polynomial Polynomial::symbol(int i) {
  if (i < 0 || i >= kNumSymbols) throw std::out_of_range("symbol index out of range");
  Exponents e{};
  e[i] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return {};
  return Polynomial(std::vector<Term>{{pack(e), c}});
}

Polynomial Polynomial::from_terms(const std::vector<std::pair<Exponents, Rational>>& terms) {
  std::map<std::uint64_t, Rational> acc;
  for (const auto& [e, c] : terms) acc[pack(e)] += c;
  std::vector<Term> out;
  for (auto& [k, c] : acc) {
    if (!c.is_zero()) out.push_back({k, c});
  }
  return Polynomial(std::move(out));
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_[0].key == 0) return terms_[0].coeff;
  return Rational(0);
}

int Polynomial::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const Term& t : terms_) {
    int s = 0;
    for (int i = 0; i < kNumSymbols; ++i) s += field(t.key, i);
    d = std::max(d, s);
  }
  return d;
}

int Polynomial::degree(int var) const {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, field(t.key, var));
  return d;
}

std::vector<std::pair<Exponents, Rational>> Polynomial::terms() const {
  std::vector<std::pair<Exponents, Rational>> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.emplace_back(unpack(t.key), t.coeff);
  return out;
}

Rational Polynomial::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.back().coeff;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  const std::uint64_t key = pack(e);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.key < k; });
  if (it != terms_.end() && it->key == key) return it->coeff;
  return Rational(0);
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = -t.coeff;
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (Term& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& big = a.size() <= b.size() ? b : a;
  if (small.is_constant()) return big * small.terms_[0].coeff;
  check_degree_sum(a, b);

  if (small.size() <= 4) {
    std::vector<Polynomial::Term> acc;
    for (const Polynomial::Term& s : small.terms_) {
      std::vector<Polynomial::Term> part;
      part.reserve(big.size());
      for (const Polynomial::Term& t : big.terms_) part.push_back({t.key + s.key, t.coeff * s.coeff});
      acc = acc.empty() ? std::move(part) : merge_terms(acc, part, false);
    }
    return Polynomial(std::move(acc));
  }

  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(big.size() * 4);
  std::vector<std::uint64_t> keys;
  std::vector<mpq_class> coeffs;
  mpq_class prod;
  for (const Polynomial::Term& s : small.terms_) {
    for (const Polynomial::Term& t : big.terms_) {
      const std::uint64_t key = s.key + t.key;
      mpq_mul(prod.get_mpq_t(), s.coeff.mpq().get_mpq_t(), t.coeff.mpq().get_mpq_t());
      auto [it, inserted] = index.try_emplace(key, coeffs.size());
      if (inserted) {
        keys.push_back(key);
        coeffs.push_back(prod);
      } else {
        mpq_add(coeffs[it->second].get_mpq_t(), coeffs[it->second].get_mpq_t(), prod.get_mpq_t());
      }
    }
  }
  std::vector<std::size_t> order(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
  std::vector<Polynomial::Term> out;
  out.reserve(order.size());
  for (std::size_t i : order) {
    if (sgn(coeffs[i]) != 0) out.push_back({keys[i], Rational(std::move(coeffs[i]))});
  }
  return Polynomial(std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t k = 1; k <= n; ++k) {
    const Polynomial::Term& x = a.terms_[a.terms_.size() - k];
    const Polynomial::Term& y = b.terms_[b.terms_.size() - k];
    if (x.key != y.key) return x.key < y.key;
    if (x.coeff != y.coeff) return x.coeff < y.coeff;
  }
  return a.terms_.size() < b.terms_.size();
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial result(1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw DenominatorVanishes("polynomial division by zero");
  if (is_zero()) return Polynomial();
  if (d.is_constant()) return *this * (Rational(1) / d.terms_[0].coeff);
  for (int i = 0; i < kNumSymbols; ++i) {
    if (degree(i) < d.degree(i)) return std::nullopt;
  }
  // Lex order is multiplicative, so both extreme terms must factor.
  if (!key_divides(d.terms_.back().key, terms_.back().key)) return std::nullopt;
  if (!key_divides(d.terms_.front().key, terms_.front().key)) return std::nullopt;

  std::map<std::uint64_t, mpq_class> rem;
  for (const Term& t : terms_) rem.emplace_hint(rem.end(), t.key, t.coeff.mpq());
  const std::uint64_t lead_key = d.terms_.back().key;
  const mpq_class& lead_coeff = d.terms_.back().coeff.mpq();
  std::vector<Term> quotient;
  mpq_class qc, prod;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (!key_divides(lead_key, top->first)) return std::nullopt;
    const std::uint64_t qk = top->first - lead_key;
    mpq_div(qc.get_mpq_t(), top->second.get_mpq_t(), lead_coeff.get_mpq_t());
    rem.erase(top);
    for (std::size_t k = 0; k + 1 < d.terms_.size(); ++k) {
      const Term& dt = d.terms_[k];
      mpq_mul(prod.get_mpq_t(), qc.get_mpq_t(), dt.coeff.mpq().get_mpq_t());
      auto [it, inserted] = rem.try_emplace(qk + dt.key);
      mpq_sub(it->second.get_mpq_t(), it->second.get_mpq_t(), prod.get_mpq_t());
      if (sgn(it->second) == 0) rem.erase(it);
    }
    quotient.push_back({qk, Rational(qc)});
  }
  std::reverse(quotient.begin(), quotient.end());
  return Polynomial(std::move(quotient));
}

Exponents Polynomial::monomial_gcd() const {
  Exponents g{};
  if (terms_.empty()) return g;
  g.fill(kMaxExponent);
  for (const Term& t : terms_) {
    for (int i = 0; i < kNumSymbols; ++i) g[i] = std::min(g[i], field(t.key, i));
  }
  return g;
}

Polynomial Polynomial::divide_monomial(const Exponents& e) const {
  const std::uint64_t k = pack(e);
  std::vector<Term> out = terms_;
  for (Term& t : out) {
    if (!key_divides(k, t.key)) throw std::invalid_argument("monomial does not divide polynomial");
    t.key -= k;
  }
  return Polynomial(std::move(out));
}

std::pair<Rational, Polynomial> Polynomial::content_and_primitive() const {
  if (terms_.empty()) return {Rational(0), Polynomial()};
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const Term& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.mpq().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.mpq().get_den_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  if (terms_.back().coeff.sign() < 0) content = -content;
  if (content.is_one()) return {content, *this};
  return {content, *this * (Rational(1) / content)};
}

Polynomial Polynomial::substitute(const std::array<Polynomial, kNumSymbols>& images) const {
  // Horner scheme in a0, recursing on the remaining symbols.
  std::function<Polynomial(const std::vector<Term>&, int)> rec =
      [&](const std::vector<Term>& terms, int var) -> Polynomial {
    if (terms.empty()) return {};
    if (var == kNumSymbols) {
      Rational c(0);
      for (const Term& t : terms) c += t.coeff;
      return Polynomial(c);
    }
    std::map<int, std::vector<Term>> groups;
    const std::uint64_t clear = ~(kFieldMask << field_shift(var));
    for (const Term& t : terms) groups[field(t.key, var)].push_back({t.key & clear, t.coeff});
    Polynomial acc;
    const int top = groups.rbegin()->first;
    for (int k = top; k >= 0; --k) {
      if (!acc.is_zero()) acc = acc * images[var];
      if (auto it = groups.find(k); it != groups.end()) acc += rec(it->second, var + 1);
    }
    return acc;
  };
  return rec(terms_, 0);
}

Polynomial Polynomial::shifted(const std::array<Rational, kNumSymbols>& shift) const {
  bool identity = true;
  for (const Rational& s : shift) identity = identity && s.is_zero();
  if (identity) return *this;
  std::array<Polynomial, kNumSymbols> images;
  for (int i = 0; i < kNumSymbols; ++i) images[i] = symbol(i) + Polynomial(shift[i]);
  return substitute(images);
}

bool Polynomial::may_be_divisible_by_linear(const Polynomial& f) const {
  if (f.total_degree() != 1) throw std::invalid_argument("divisor is not linear");
  if (is_zero()) return true;
  // Solve f = 0 for its lexicographically leading symbol.
  int solve_for = -1;
  std::array<std::uint64_t, kNumSymbols> lin{};
  std::uint64_t lin_const = 0;
  for (const Term& t : f.terms_) {
    auto r = residue(t.coeff);
    if (!r) return true;
    if (t.key == 0) {
      lin_const = *r;
      continue;
    }
    for (int i = 0; i < kNumSymbols; ++i) {
      if (field(t.key, i) == 1) {
        lin[i] = *r;
        if (solve_for < 0) solve_for = i;
      }
    }
  }
  if (solve_for < 0 || lin[solve_for] == 0) return true;
  std::uint64_t state = 0x5eedULL ^ (f.hash() * 0x9e3779b97f4a7c15ULL);
  std::array<std::uint64_t, kNumSymbols> x{};
  std::uint64_t rest = lin_const;
  for (int i = 0; i < kNumSymbols; ++i) {
    if (i == solve_for) continue;
    x[i] = splitmix(state) % kPrime;
    rest = addmod(rest, mulmod(lin[i], x[i]));
  }
  x[solve_for] = mulmod((kPrime - rest) % kPrime, powmod(lin[solve_for], kPrime - 2));

  std::array<std::vector<std::uint64_t>, kNumSymbols> powers;
  for (int i = 0; i < kNumSymbols; ++i) {
    const int d = degree(i);
    powers[i].resize(static_cast<std::size_t>(d) + 1);
    powers[i][0] = 1;
    for (int k = 1; k <= d; ++k) powers[i][k] = mulmod(powers[i][k - 1], x[i]);
  }
  std::uint64_t sum = 0;
  for (const Term& t : terms_) {
    auto r = residue(t.coeff);
    if (!r) return true;
    std::uint64_t v = *r;
    for (int i = 0; i < kNumSymbols; ++i) v = mulmod(v, powers[i][field(t.key, i)]);
    sum = addmod(sum, v);
  }
  return sum == 0;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->coeff;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = negative ? -c : c;
    std::string mono;
    for (int i = 0; i < kNumSymbols; ++i) {
      const int e = field(it->key, i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "a" + std::to_string(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << mag.str();
    } else if (mag.is_one()) {
      os << mono;
    } else {
      os << mag.str() << "*" << mono;
    }
  }
  return os.str();
}

std::size_t Polynomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) { h = (h ^ v) * 0x100000001b3ULL; };
  for (const Term& t : terms_) {
    mix(t.key);
    mix(mpz_get_ui(t.coeff.mpq().get_num_mpz_t()));
    mix(static_cast<std::size_t>(t.coeff.sign() + 1));
    mix(mpz_get_ui(t.coeff.mpq().get_den_mpz_t()));
  }
  return h;
}

namespace symbols {

Polynomial a(int i) { return Polynomial::symbol(i); }

Polynomial phi1() { return a(0) + a(1) + a(2); }

Polynomial phi2() { return a(0) * a(1) + a(1) * a(2) + a(2) * a(0); }

Polynomial phi3() { return a(0) * a(1) * a(2); }

Polynomial saalschutz() { return a(3) + a(4) - a(0) - a(1) - a(2); }

Polynomial psi() { return a(3) * a(4) - phi2() - phi1() - Polynomial(1); }

}  // namespace symbols

}  // namespace hyp3f2
