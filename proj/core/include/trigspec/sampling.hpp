#pragma once

#include <functional>
#include <vector>

#include "trigspec/fourier_series.hpp"
#include "trigspec/signal_model.hpp"

namespace trigspec {

/// Uniform grid of N = 2n+1 nodes t_j = 2*pi*j/N, j = 0..N-1, over one period.
///
/// Node indices are zero-based here; the CSV form numbers them 1..N.
class UniformGrid {
 public:
  explicit UniformGrid(int n);

  int n() const noexcept { return n_; }
  int size() const noexcept { return 2 * n_ + 1; }
  double spacing() const noexcept;
  double node(int j) const;
  std::vector<double> nodes() const;

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;

 private:
  int n_;
};

UniformGrid make_grid(int n);

struct SampleVector {
  UniformGrid grid;
  std::vector<double> values;
};

SampleVector sample(const AnalyticSignal& signal, const UniformGrid& grid);
SampleVector sample(const std::function<double(double)>& fn, const UniformGrid& grid);

/// The N independent discrete coefficients a*_0, a*_k, b*_k (k = 1..n).
struct DiscreteSpectrum {
  UniformGrid grid;
  double a0 = 0.0;
  std::vector<double> a;  ///< a[k-1] = a*_k
  std::vector<double> b;  ///< b[k-1] = b*_k

  /// a0/2 + sum_{k=1}^{n} (a_k cos kt + b_k sin kt)
  double reconstruct(double t) const;

  FourierSeries as_series() const;
};

/// a*_0 = (2/N) sum f(t_j),  a*_k = (2/N) sum f(t_j) cos k t_j,
/// b*_k = (2/N) sum f(t_j) sin k t_j.
///
/// Direct O(N^2) summation in fixed order. The phase k*j is reduced modulo N
/// before the trig call, so node values of in-band harmonics are reproduced
/// exactly up to rounding.
DiscreteSpectrum discrete_coeffs(const SampleVector& samples);

/// Band representative of harmonic j on N nodes.
struct AliasClass {
  int k = 0;         ///< 0..n; 0 is the DC class (j = mN)
  int cos_sign = 1;  ///< always +1
  int sin_sign = 1;  ///< -1 when j folds as mN - k
};

AliasClass alias_class(long long j, int N);

/// Periodic/even/odd extension: (a*_k, sin_sign * b*_k) for the alias class
/// of j; (a*_0, 0) for the DC class.
CoeffPair extended_coeff(const DiscreteSpectrum& spectrum, long long j);

}  // namespace trigspec
