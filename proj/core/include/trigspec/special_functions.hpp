#pragma once

// Special sums behind the class normalizers, fold identities and spline
// tails: Hurwitz zeta, one-sided Lerch tails on the unit circle and the
// Bernoulli-polynomial closed forms of power-decay trigonometric series.

#include <complex>
#include <vector>

namespace trigspec {

/// A truncated series value together with how it was obtained.
struct SeriesValue {
  double value = 0.0;
  long terms = 0;            ///< explicitly summed terms
  double error_bound = 0.0;  ///< bound on |exact - value|
};

/// Hurwitz zeta  sum_{m>=0} (m+a)^{-s}  for s > 1, a > 0.
///
/// Sums the first M terms directly and the rest by Euler-Maclaurin; the
/// remainder is bounded by the first omitted correction, which is valid
/// because (x+a)^{-s} is completely monotone. M doubles until the bound is
/// below abs_tol; exceeding max_terms throws TruncationCapError.
SeriesValue hurwitz_zeta(double s, double a, double abs_tol = 1e-15,
                         long max_terms = 1'000'000);

/// Bernoulli number B_n for 0 <= n <= 30 (B_1 = -1/2).
double bernoulli_number(int n);

/// Bernoulli polynomial B_n(x), 0 <= n <= 20.
double bernoulli_polynomial(int n, double x);

/// sum_{k>=1} cos(kt)/k^p  (cosine == true) or  sum_{k>=1} sin(kt)/k^p.
///
/// Uses direct summation when the tail bound K^{1-p}/(p-1) < 1e-14 is reached
/// within a few thousand terms, the exact Bernoulli-polynomial form when p is
/// an integer of matching parity, and long direct summation otherwise. The
/// conditionally convergent sine series with p = 1 is the sawtooth (pi-t)/2.
double power_trig_series(double p, bool cosine, double t);

/// Generalized Gauss-Laguerre rule for weight x^alpha e^{-x}, weights
/// normalized to sum to one.
struct GaussLaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLaguerreRule gauss_laguerre(int points, double alpha);

/// One-sided Lerch sum  sum_{m>=0} e^{i m theta} (m+b)^{-s}  for integer s >= 2.
///
/// Uses the Laplace representation with the pole nearest the real axis
/// removed analytically; the smooth remainder is integrated by Gauss-Laguerre
/// and the pole part is an incomplete-gamma continued fraction (or its power
/// series near the origin). Accurate to ~1e-15 relative for every theta.
class LerchTail {
 public:
  explicit LerchTail(int s, int points = 40);

  std::complex<double> operator()(double theta, double b) const;

  int order() const noexcept { return s_; }

 private:
  std::complex<double> far_tail(double theta, double b) const;

  int s_;
  GaussLaguerreRule rule_;
};

/// Reduce an angle to (-pi, pi].
double wrap_angle(double theta);

}  // namespace trigspec
