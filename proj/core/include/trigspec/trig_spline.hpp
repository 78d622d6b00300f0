#pragma once

#include <span>
#include <vector>

#include "trigspec/fourier_series.hpp"
#include "trigspec/sampling.hpp"
#include "trigspec/special_functions.hpp"
#include "trigspec/spline_kernel.hpp"

namespace trigspec {

/// Interpolating trigonometric spline of order r,
///   St(r,t) = alpha_0 a*_0/2 + sum_{j>=1} alpha(r,j) (a*_j cos jt + b*_j sin jt),
/// with (a*_j, b*_j) the extended discrete coefficients of the samples.
///
/// The first J = L*N harmonics are stored explicitly; evaluation adds the
/// remaining infinite tail class by class in closed form (one-sided Lerch
/// sums), so the value does not depend on the choice of J.
class TrigSpline {
 public:
  const KernelConfig& config() const noexcept { return table_.config; }
  const DiscreteSpectrum& spectrum() const noexcept { return spectrum_; }
  const FilterTable& table() const noexcept { return table_; }
  long long J() const noexcept { return static_cast<long long>(coeffs_.size()); }
  /// Constant coefficient: the series starts with a0()/2.
  double a0() const noexcept { return a0_; }
  /// coeffs()[j-1] = (a_hat_j, b_hat_j), j = 1..J.
  std::span<const CoeffPair> coeffs() const noexcept { return coeffs_; }
  /// Bound on the contribution of harmonics beyond J.
  double tail_bound() const noexcept { return tail_bound_; }

  double operator()(double t) const;

 private:
  friend TrigSpline build_spline(const SampleVector& samples, const KernelConfig& config);

  TrigSpline(DiscreteSpectrum spectrum, FilterTable table, std::vector<CoeffPair> coeffs, double a0,
             double tail_bound);

  double tail(double x) const;

  DiscreteSpectrum spectrum_;
  FilterTable table_;
  std::vector<CoeffPair> coeffs_;
  double a0_;
  double tail_bound_;
  LerchTail lerch_;
};

/// Largest class multiple L allowed for J = L*N.
inline constexpr int kMaxClassMultiple = 64;

/// Builds the spline from samples; J is the smallest multiple of N (up to
/// 64N) whose neglected coefficient mass is below config.tail_tol.
TrigSpline build_spline(const SampleVector& samples, const KernelConfig& config);

double spline_eval(const TrigSpline& spline, double t);

/// (alpha(r,j) a*_j, alpha(r,j) b*_j) for any j >= 1, including j > J.
CoeffPair spline_fourier_coeff(const TrigSpline& spline, long long j);

struct UnfoldedRow {
  long long j = 0;
  double a_hat = 0.0;
  double b_hat = 0.0;
};

/// Spline coefficients for j = 1..j_max, beyond the Nyquist band included.
std::vector<UnfoldedRow> unfolded_spectrum(const TrigSpline& spline, long long j_max);

/// The spline's series truncated after `degree` harmonics (J when 0).
FourierSeries truncated_series(const TrigSpline& spline, long long degree = 0);

/// The interpolating trigonometric polynomial of the same data
/// (alpha = 1 inside the band, 0 outside).
FourierSeries interpolating_polynomial(const DiscreteSpectrum& spectrum);

/// int_0^{2pi} [f^{(order)}(t)]^2 dt for a finite series, with the derivative
/// taken termwise and the integral by the periodic trapezoid rule on
/// `resolution` points (exact once resolution > 2 * degree).
double curvature_functional(const FourierSeries& fn, int order, int resolution);

}  // namespace trigspec
