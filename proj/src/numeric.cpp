#include "hyp3f2/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>

namespace hyp3f2 {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleTol = 1e-12;

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double distance_to_integer(Complex z) {
  return std::abs(z - Complex(std::round(z.real()), 0.0));
}

bool near_nonpositive_integer(Complex z, double tol) {
  return z.real() < 0.5 && std::round(z.real()) <= 0.0 && distance_to_integer(z) < tol;
}

// log Gamma for Re z >= 1/2, any branch.
Complex log_gamma_right(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log Gamma up to a multiple of 2 pi i; exponentiating gives Gamma.
Complex log_gamma_any(Complex z) {
  if (z.real() >= 0.5) return log_gamma_right(z);
  return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_right(1.0 - z);
}

Complex saalschutz_c(const ComplexParams& a) { return a[3] + a[4] - a[0] - a[1] - a[2]; }

Complex sin_pi(Complex z) {
  const Complex v = std::sin(kPi * z);
  return v;
}

Complex checked_sin_pi(Complex z, const char* what) {
  if (distance_to_integer(z) < kPoleTol) throw TrigPole(std::string("sine vanishes at ") + what);
  return sin_pi(z);
}

double relative(Complex diff, std::initializer_list<double> scales) {
  const double m = std::max(scales);
  if (m == 0.0) return std::abs(diff) == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(diff) / m;
}

std::string format_complex(Complex z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "j";
  return os.str();
}

// Compensated summation of complex terms, real and imaginary parts separately.
class NeumaierSum {
 public:
  void add(Complex x) {
    add_part(re_, cre_, x.real());
    add_part(im_, cim_, x.imag());
  }
  Complex value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void add_part(double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x)) {
      c += (s - t) + x;
    } else {
      c += (x - t) + s;
    }
    s = t;
  }
  double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

}  // namespace

Complex complex_gamma(Complex z) {
  if (near_nonpositive_integer(z, kPoleTol)) {
    throw PoleOfGamma("gamma has a pole at " + format_complex(z));
  }
  if (z.imag() == 0.0 && z.real() > 0.0) return {std::tgamma(z.real()), 0.0};
  return std::exp(log_gamma_any(z));
}

SeriesOptions default_series_options() {
  SeriesOptions opt;
  if (const char* env = std::getenv("HYP3F2_ITER_CAP")) {
    char* end = nullptr;
    const long long cap = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) opt.iteration_cap = cap;
  }
  return opt;
}

void check_generic(const ComplexParams& a, const SeriesOptions& opt) {
  static const char* names[5] = {"a0", "a1", "a2", "b1", "b2"};
  for (int i = 0; i < 5; ++i) {
    if (distance_to_integer(a[i]) < opt.generic_tol) {
      throw NonGenericPoint(std::string("parameter ") + names[i] + " is an integer");
    }
    for (int j = i + 1; j < 5; ++j) {
      if (distance_to_integer(a[i] - a[j]) < opt.generic_tol) {
        throw NonGenericPoint(std::string("parameter difference ") + names[i] + " - " + names[j] +
                              " is an integer");
      }
    }
  }
  const double re_s = saalschutz_c(a).real();
  if (re_s < opt.sigma_min) {
    std::ostringstream os;
    os << "convergence margin violated: Re s(a) = " << re_s << " < " << opt.sigma_min;
    throw NonGenericPoint(os.str());
  }
}

SeriesValue hgf_unit(const ComplexParams& a, const SeriesOptions& opt) {
  const double re_s = saalschutz_c(a).real();
  if (re_s < opt.sigma_min || re_s <= 1.0) {
    std::ostringstream os;
    os << "convergence margin violated: Re s(a) = " << re_s << " < " << opt.sigma_min;
    throw NonGenericPoint(os.str());
  }
  for (int i = 3; i < 5; ++i) {
    if (near_nonpositive_integer(a[i], kPoleTol)) {
      throw NonGenericPoint("denominator parameter is a non-positive integer");
    }
  }
  Complex t = complex_gamma(a[0]) * complex_gamma(a[1]) * complex_gamma(a[2]) /
              (complex_gamma(a[3]) * complex_gamma(a[4]));
  double magnitude = 0;
  for (int i = 0; i < 5; ++i) magnitude = std::max(magnitude, std::abs(a[i]));
  const std::int64_t warmup = static_cast<std::int64_t>(2.0 * magnitude) + 8;

  NeumaierSum sum;
  double abs_sum = 0;
  for (std::int64_t k = 0; k < opt.iteration_cap; ++k) {
    sum.add(t);
    abs_sum += std::abs(t);
    const double kd = static_cast<double>(k);
    t *= (a[0] + kd) * (a[1] + kd) * (a[2] + kd) / ((kd + 1.0) * (a[3] + kd) * (a[4] + kd));
    if (k + 1 >= warmup) {
      const double tail = std::abs(t) * static_cast<double>(k + 1) / (re_s - 1.0);
      const double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(sum.value()));
      if (tail < target || t == Complex(0.0)) {
        const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * abs_sum;
        return {sum.value(), tail + rounding, k + 1};
      }
    }
  }
  throw SlowConvergence("series did not reach tolerance within " + std::to_string(opt.iteration_cap) +
                        " terms");
}

std::string companion_name(CompanionId id) {
  return "y_" + std::to_string(id.i) + (id.nu == Branch::Zero ? "^{(0)}" : "^{(inf)}");
}

Involution companion_involution(CompanionId id) {
  static constexpr Involution zero[3] = {Involution::Identity, Involution::Tau1, Involution::Tau2};
  static constexpr Involution inf[3] = {Involution::Sigma0, Involution::Sigma1, Involution::Sigma2};
  if (id.i < 0 || id.i > 2) throw std::out_of_range("companion index must be 0, 1 or 2");
  return id.nu == Branch::Zero ? zero[id.i] : inf[id.i];
}

Complex companion(CompanionId id, const ComplexParams& a, const SeriesOptions& opt) {
  const Complex value = hgf_unit(apply_involution(companion_involution(id), a), opt).value;
  if (id.nu == Branch::Zero) return value;
  return std::exp(Complex(0.0, kPi) * saalschutz_c(a)) * value;
}

double max_residual(const ResidualReport& r) {
  double m = 0;
  for (const Residual& x : r) m = std::max(m, x.residual);
  return m;
}

ResidualReport three_term_residuals(const ShiftVector& p, const ShiftVector& q, Complex u, Complex v,
                                    const ComplexParams& a, const SeriesOptions& opt) {
  const ComplexParams ap = translate(a, p), aq = translate(a, q);
  ResidualReport report;
  for (std::size_t n = 0; n < kAllCompanions.size(); ++n) {
    const CompanionId id = kAllCompanions[n];
    const Complex h = companion(id, a, opt);
    const Complex up = u * companion(id, ap, opt);
    const Complex vq = v * companion(id, aq, opt);
    report[n] = {id, relative(h - up - vq, {std::abs(h), std::abs(up), std::abs(vq)})};
  }
  return report;
}

ResidualReport verify_three_term(const ThreeTermRelation& rel, const ComplexParams& a, const SeriesOptions& opt) {
  check_generic(a, opt);
  Complex u, v;
  try {
    u = rel.u.evaluate<Complex>(a);
    v = rel.v.evaluate<Complex>(a);
  } catch (const DenominatorVanishes&) {
    throw CoefficientPole("relation coefficient has a pole at this point");
  }
  return three_term_residuals(rel.p, rel.q, u, v, a, opt);
}

ResidualReport verify_three_term(const ShiftVector& p, const ShiftVector& q, const Params<GaussianRational>& a,
                                 const SeriesOptions& opt) {
  const ComplexParams ac = to_complex(a);
  check_generic(ac, opt);
  std::pair<GaussianRational, GaussianRational> uv;
  try {
    uv = three_term_coefficients_at(p, q, a);
  } catch (const DenominatorVanishes&) {
    throw CoefficientPole("relation coefficient has a pole at this point");
  }
  return three_term_residuals(p, q, uv.first.to_complex(), uv.second.to_complex(), ac, opt);
}

double verify_thomae(const ComplexParams& a, int j, const SeriesOptions& opt) {
  if (j != 1 && j != 2) throw std::invalid_argument("Thomae index must be 1 or 2");
  const int k = 3 - j;
  const Complex bj = a[2 + j], bk = a[2 + k];
  const Complex den = checked_sin_pi(bj, "b_j") * checked_sin_pi(bk - a[0], "b_k - a0");
  const Complex c0 = sin_pi(a[1]) * sin_pi(a[2]) / den;
  const Complex cj = sin_pi(a[1] - bj) * sin_pi(a[2] - bj) / den;
  const Complex lhs = std::exp(Complex(0.0, -kPi) * saalschutz_c(a)) * companion({0, Branch::Infinity}, a, opt);
  const Complex t0 = c0 * companion({0, Branch::Zero}, a, opt);
  const Complex tj = cj * companion({j, Branch::Zero}, a, opt);
  return relative(lhs - t0 + tj, {std::abs(lhs), std::abs(t0), std::abs(tj)});
}

Complex trig_c(const ComplexParams& a) {
  const Complex den = checked_sin_pi(a[3], "b1") * checked_sin_pi(a[4], "b2");
  return sin_pi(a[0]) * sin_pi(a[1]) * sin_pi(a[2]) / den;
}

std::array<Complex, 3> trig_coefficients(const ComplexParams& a) {
  return {trig_c(a), trig_c(apply_involution(Involution::Tau1, a)),
          trig_c(apply_involution(Involution::Tau2, a))};
}

double verify_trig_relation(const ComplexParams& a, const ShiftVector& coefficient_shift, const SeriesOptions& opt) {
  const std::array<Complex, 3> c = trig_coefficients(translate(a, coefficient_shift));
  Complex total = 0;
  double scale = 0;
  for (int i = 0; i < 3; ++i) {
    const Complex term = c[static_cast<std::size_t>(i)] * companion({i, Branch::Zero}, a, opt);
    total += term;
    scale = std::max(scale, std::abs(term));
  }
  return relative(total, {scale});
}

ComplexParams to_complex(const Params<GaussianRational>& a) {
  ComplexParams out;
  for (int i = 0; i < 5; ++i) out[i] = a[i].to_complex();
  return out;
}

}  // namespace hyp3f2
