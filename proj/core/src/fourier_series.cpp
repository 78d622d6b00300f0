#include "trigspec/fourier_series.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "harmonic_sum.hpp"
#include "trigspec/errors.hpp"

namespace trigspec {

double FourierSeries::operator()(double t) const {
  double x = std::fmod(t, 2.0 * std::numbers::pi);
  if (x < 0.0) x += 2.0 * std::numbers::pi;
  // High harmonics first; they are the smallest for the series used here.
  const double sum = detail::harmonic_sum(x, static_cast<long long>(a.size()), [this](long long j) {
    return std::pair<double, double>{a[j - 1], b[j - 1]};
  });
  return 0.5 * a0 + sum;
}

FourierSeries FourierSeries::derivative(int order) const {
  if (order < 0) throw DomainError("FourierSeries::derivative: negative order");
  if (order == 0) return *this;
  FourierSeries out;
  out.a.resize(a.size());
  out.b.resize(b.size());
  for (std::size_t j = 1; j <= a.size(); ++j) {
    const double scale = std::pow(static_cast<double>(j), order);
    const double ca = a[j - 1] * scale;
    const double cb = b[j - 1] * scale;
    // d^q/dt^q [a cos + b sin] cycles with period four in q.
    switch (order % 4) {
      case 0: out.a[j - 1] = ca; out.b[j - 1] = cb; break;
      case 1: out.a[j - 1] = cb; out.b[j - 1] = -ca; break;
      case 2: out.a[j - 1] = -ca; out.b[j - 1] = -cb; break;
      default: out.a[j - 1] = -cb; out.b[j - 1] = ca; break;
    }
  }
  return out;
}

}  // namespace trigspec
