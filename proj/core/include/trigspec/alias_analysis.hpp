#pragma once

#include "trigspec/sampling.hpp"
#include "trigspec/signal_model.hpp"

namespace trigspec {

/// Fold of the true spectrum onto band index k:
///   a*_k = a_k + sum_{m>=1} (a_{mN+k} + a_{mN-k}),
///   b*_k = b_k + sum_{m>=1} (b_{mN+k} - b_{mN-k}),
///   a*_0 = a_0 + 2 sum_{m>=1} a_{mN}.
struct FoldReport {
  int k = 0;
  double folded_value_a = 0.0;
  double folded_value_b = 0.0;
  long m_used = 0;          ///< fold terms summed explicitly per family
  double tail_bound = 0.0;  ///< bound on the neglected remainder
};

/// Evaluates the fold sums from the analytic coefficients. HarmonicSum folds
/// are finite and exact; the power-decay folds are Hurwitz zeta values,
/// summed directly for m_used terms with an Euler-Maclaurin remainder below tol.
FoldReport folded_coeffs(const AnalyticSignal& signal, const UniformGrid& grid, int k, double tol);

/// Upper bound on |a_k - a*_k| (and |b_k - b*_k|) for the smoothness class:
///   (1/pi) * variation * sum_{m>=1} [(mN+k)^{-(r+1)} + (mN-k)^{-(r+1)}].
/// The series is summed until the neglected tail is below tol and then
/// replaced by its integral majorant, so the result never undershoots.
/// Infinite for r = 0, where the series diverges.
double aliasing_error_bound(int k, const UniformGrid& grid, const SmoothnessInfo& smoothness, double tol);

/// DC analogue: bound on |a_0 - a*_0| = 2 |sum_{m>=1} a_{mN}|.
double dc_aliasing_error_bound(const UniformGrid& grid, const SmoothnessInfo& smoothness, double tol);

/// f_n(t) = a_0/2 + sum_{k=1}^{n} (a_k cos kt + b_k sin kt).
double band_component(const AnalyticSignal& signal, int n, double t);

/// f_n*(t): the out-of-band series over the mN +- k families, k = 1..n, at
/// their own frequencies. The DC family mN is excluded (it only moves a*_0).
///
/// f* = f_n + f_n* holds at the grid nodes up to the constant (a*_0 - a_0)/2;
/// away from the nodes f_n* oscillates at the true frequencies while f*
/// carries them at the folded ones.
double residual_component(const AnalyticSignal& signal, const UniformGrid& grid, double t, double tol);

/// 2 * variation / n^r, bound on sup_t |f_n(t) - f*(t)|. Requires r >= 1.
double time_domain_bound(int n, const SmoothnessInfo& smoothness);

}  // namespace trigspec
