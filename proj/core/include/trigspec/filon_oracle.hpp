#pragma once

#include <functional>
#include <vector>

#include "trigspec/fourier_series.hpp"

namespace trigspec {

using PeriodicFn = std::function<double(double)>;

struct QuadratureConfig {
  int points = 256;  ///< starting grid size, a power of two >= 256
  int max_doublings = 12;
  double convergence_tol = 1e-12;
};

void validate(const QuadratureConfig& qc);

/// (1/pi) int_0^{2pi} fn(t) (cos kt, sin kt) dt by the periodic trapezoid
/// rule, doubling the grid until two successive estimates agree within
/// convergence_tol. The starting grid is raised to at least 32*max(k,1)
/// points. Throws QuadratureFailure if max_doublings is exhausted.
CoeffPair quad_fourier_coeff(const PeriodicFn& fn, int k, const QuadratureConfig& qc = {});

struct FilonRow {
  int k = 0;
  double a_hat = 0.0;
  double b_hat = 0.0;
};

/// Fourier coefficients of an approximant for k = k_lo..k_hi.
std::vector<FilonRow> filon_coeffs(const PeriodicFn& phi, int k_lo, int k_hi,
                                   const QuadratureConfig& qc = {});

/// (4/pi) * sup_error; bounds |a_k - a_hat_k| and |b_k - b_hat_k| for every k.
double cnorm_error_bound(double sup_error);

/// diff_variation / (pi k^{q+1}).
double refined_error_bound(int k, int q, double diff_variation);

/// max |f - g| over a uniform grid of `points` nodes in [0, 2pi); a lower
/// estimate of the sup norm.
double sup_distance(const PeriodicFn& f, const PeriodicFn& g, int points = 16384);

/// Total variation over one period on a uniform grid (estimate).
double total_variation(const PeriodicFn& fn, int points = 1 << 16);

}  // namespace trigspec
