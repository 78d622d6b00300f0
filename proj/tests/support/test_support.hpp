#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/polygamma.hpp>

#include "trigspec/signal_model.hpp"

namespace trigspec::testing {

inline constexpr double kPi = std::numbers::pi;

struct SuiteSignal {
  std::string name;
  AnalyticSignal signal;
  bool out_of_band;  ///< has harmonics above every tested Nyquist band
};

// Six signals: two trigonometric polynomials and four power-decay series.
// Power-decay classes: cos p -> r = p-2 with Var = pi^2/2 (the r-th
// derivative is +-sum cos kt / k^2), sin p=3 -> r = 2 with Var = 2*pi
// (sawtooth).
inline std::vector<SuiteSignal> suite() {
  return {
      {"harmonic_in_band", AnalyticSignal::harmonic_sum({{0, 0.5, 0.0}, {1, 1.0, 0.0}, {2, 0.0, 0.5}}, 3), false},
      {"harmonic_wide", AnalyticSignal::harmonic_sum({{1, 1.0, 0.0}, {7, 0.3, -0.2}, {41, 0.05, 0.1}}, 3), true},
      {"cos_p2", AnalyticSignal::power_decay_cosine(2.0, {0, kPi * kPi / 2.0}), true},
      {"cos_p4", AnalyticSignal::power_decay_cosine(4.0, {2, kPi * kPi / 2.0}), true},
      {"cos_p6", AnalyticSignal::power_decay_cosine(6.0, {4, kPi * kPi / 2.0}), true},
      {"sin_p3", AnalyticSignal::power_decay_sine(3.0, {2, 2.0 * kPi}), true},
  };
}

inline AnalyticSignal cos_power(double p) {
  return AnalyticSignal::power_decay_cosine(p, {static_cast<int>(p) - 2, kPi * kPi / 2.0});
}

/// Hurwitz zeta for integer s >= 2 through Boost's polygamma:
/// zeta(s, a) = (-1)^s psi^{(s-1)}(a) / (s-1)!.
inline double boost_hurwitz(int s, double a) {
  const double sign = (s % 2 == 0) ? 1.0 : -1.0;
  return sign * boost::math::polygamma(s - 1, a) / boost::math::factorial<double>(s - 1);
}

/// sum_{k=1}^{K} trig(k t) / k^p, summed from the small terms up.
inline double brute_power_trig(double p, bool cosine, double t, long K) {
  double sum = 0.0;
  for (long k = K; k >= 1; --k) {
    const double x = static_cast<double>(k) * t;
    sum += (cosine ? std::cos(x) : std::sin(x)) / std::pow(static_cast<double>(k), p);
  }
  return sum;
}

/// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// Fixed-seed generator so property runs are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 20240917) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace trigspec::testing
