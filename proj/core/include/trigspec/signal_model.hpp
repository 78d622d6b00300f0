#pragma once

#include <optional>
#include <span>
#include <vector>

#include "trigspec/fourier_series.hpp"

namespace trigspec {

/// Membership in the class of 2*pi-periodic functions whose r-th derivative
/// has bounded variation, with the total variation of that derivative.
struct SmoothnessInfo {
  int r = 0;
  double variation = 0.0;
};

enum class SignalKind { HarmonicSum, PowerDecayCosine, PowerDecaySine };

/// One term a_k cos kt + b_k sin kt. k = 0 carries the constant a_0 (the
/// series contributes a_0/2), with b = 0.
struct Harmonic {
  int k = 0;
  double a = 0.0;
  double b = 0.0;
};

/// Periodic test signal with closed-form Fourier coefficients.
///
/// HarmonicSum: finitely many harmonics; the variation of the r-th
/// derivative is computed exactly when not supplied.
/// PowerDecayCosine / PowerDecaySine: a_k = k^{-p} (resp. b_k = k^{-p}) for
/// all k >= 1, p > 1, no constant term; the variation must be supplied.
///
/// Immutable after construction.
class AnalyticSignal {
 public:
  static AnalyticSignal harmonic_sum(std::vector<Harmonic> terms, int r = 1,
                                     std::optional<double> variation = std::nullopt);
  static AnalyticSignal power_decay_cosine(double p, SmoothnessInfo smoothness);
  static AnalyticSignal power_decay_sine(double p, SmoothnessInfo smoothness);

  SignalKind kind() const noexcept { return kind_; }
  std::span<const Harmonic> terms() const noexcept { return terms_; }
  double p() const noexcept { return p_; }
  const SmoothnessInfo& smoothness() const noexcept { return smoothness_; }

  /// Largest harmonic present (HarmonicSum only; 0 for the power kinds).
  int max_harmonic() const noexcept;

  double operator()(double t) const;

 private:
  AnalyticSignal() = default;

  SignalKind kind_ = SignalKind::HarmonicSum;
  std::vector<Harmonic> terms_;
  double p_ = 0.0;
  SmoothnessInfo smoothness_;
};

/// f(t) = a0/2 + sum (a_k cos kt + b_k sin kt).
double eval(const AnalyticSignal& signal, double t);

/// q-th derivative of the signal, evaluated termwise in closed form.
double eval_derivative(const AnalyticSignal& signal, int order, double t);

/// Exact coefficients (a_k, b_k); for k = 0 returns (a_0, 0).
CoeffPair true_coeff(const AnalyticSignal& signal, int k);

/// (1/pi) * variation / k^{r+1}, the decay bound on |a_k| and |b_k|.
double coefficient_bound(const SmoothnessInfo& smoothness, int k);

/// Total variation of the signal's derivative of the given order, measured
/// on a uniform grid of `points` nodes over one period. This is a lower
/// estimate of the true variation and is how supplied variations for the
/// power-decay kinds are derived.
double measure_variation(const AnalyticSignal& signal, int order, int points = 1 << 16);

/// Truncated series of a HarmonicSum (exact); power kinds are truncated at
/// `degree` harmonics.
FourierSeries to_fourier_series(const AnalyticSignal& signal, int degree = 0);

}  // namespace trigspec
