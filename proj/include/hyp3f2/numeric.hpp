#ifndef HYP3F2_NUMERIC_HPP_
#define HYP3F2_NUMERIC_HPP_

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include "hyp3f2/connection.hpp"
#include "hyp3f2/involutions.hpp"

namespace hyp3f2 {

using Complex = std::complex<double>;
using ComplexParams = Params<Complex>;

/// Gamma function on the complex plane; throws PoleOfGamma near non-positive integers.
Complex complex_gamma(Complex z);

struct SeriesOptions {
  /// Truncate once the tail bound is below max(abs_tol, rel_tol * |partial sum|).
  double abs_tol = 0.0;
  double rel_tol = 1e-13;
  std::int64_t iteration_cap = 10'000'000;
  double sigma_min = 2.0;
  /// Distance from integers below which a parameter counts as non-generic.
  double generic_tol = 1e-6;
};

/// Reads HYP3F2_ITER_CAP into the iteration cap when set.
SeriesOptions default_series_options();

struct SeriesValue {
  Complex value;
  double error_estimate;
  std::int64_t terms;
};

/// Renormalized series sum_k prod Gamma(a_i + k) / (k! Gamma(b1 + k) Gamma(b2 + k)) at z = 1.
/// Requires Re s(a) >= sigma_min; throws NonGenericPoint otherwise and SlowConvergence at the cap.
SeriesValue hgf_unit(const ComplexParams& a, const SeriesOptions& opt = {});

/// Throws NonGenericPoint unless no a_i and no a_i - a_j lies within generic_tol of an integer
/// and Re s(a) >= sigma_min.
void check_generic(const ComplexParams& a, const SeriesOptions& opt = {});

enum class Branch { Zero, Infinity };

struct CompanionId {
  int i;
  Branch nu;
  friend bool operator==(const CompanionId&, const CompanionId&) = default;
};

inline constexpr std::array<CompanionId, 6> kAllCompanions = {
    CompanionId{0, Branch::Zero},     CompanionId{1, Branch::Zero},     CompanionId{2, Branch::Zero},
    CompanionId{0, Branch::Infinity}, CompanionId{1, Branch::Infinity}, CompanionId{2, Branch::Infinity}};

/// "y_0^{(0)}", "y_2^{(inf)}".
std::string companion_name(CompanionId id);

/// Parameter involution attached to a companion.
Involution companion_involution(CompanionId id);

/// y_i^{(nu)}(a) at z = 1.
Complex companion(CompanionId id, const ComplexParams& a, const SeriesOptions& opt = {});

struct Residual {
  CompanionId id;
  double residual;
};

using ResidualReport = std::array<Residual, 6>;

double max_residual(const ResidualReport& r);

/// Six companion residuals of h(a) = u h(a+p) + v h(a+q) with u, v evaluated from the symbolic relation.
/// Throws CoefficientPole when u or v has a pole at a.
ResidualReport verify_three_term(const ThreeTermRelation& rel, const ComplexParams& a,
                                 const SeriesOptions& opt = {});

/// Same check with u, v computed exactly at a rational complex point without a symbolic stage.
ResidualReport verify_three_term(const ShiftVector& p, const ShiftVector& q, const Params<GaussianRational>& a,
                                 const SeriesOptions& opt = {});

/// Residual of the three-term identity for given numeric coefficients.
ResidualReport three_term_residuals(const ShiftVector& p, const ShiftVector& q, Complex u, Complex v,
                                    const ComplexParams& a, const SeriesOptions& opt = {});

/// Thomae relation linking y_0^{(inf)} with y_0^{(0)} and y_j^{(0)}, j in {1, 2}.
double verify_thomae(const ComplexParams& a, int j, const SeriesOptions& opt = {});

/// c(a) = sin(pi a0) sin(pi a1) sin(pi a2) / (sin(pi b1) sin(pi b2)); throws TrigPole.
Complex trig_c(const ComplexParams& a);

/// c_i(a) = c(sigma_i^{(0)}(a)), i = 0, 1, 2.
std::array<Complex, 3> trig_coefficients(const ComplexParams& a);

/// Relative residual of sum c_i y_i^{(0)} = 0. The coefficients are taken at a + coefficient_shift.
double verify_trig_relation(const ComplexParams& a, const ShiftVector& coefficient_shift = {},
                            const SeriesOptions& opt = {});

ComplexParams to_complex(const Params<GaussianRational>& a);

}  // namespace hyp3f2

#endif  // HYP3F2_NUMERIC_HPP_
