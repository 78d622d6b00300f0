#include "trigspec/trig_spline.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include "harmonic_sum.hpp"
#include "trigspec/errors.hpp"

namespace trigspec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

double reduce(double t) {
  double x = std::fmod(t, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  return x;
}

std::complex<double> phase(long long j, double x) {
  return std::polar(1.0, std::fmod(static_cast<double>(j) * x, kTwoPi));
}

// sum_{j > L*N} |alpha_j|, from the class constants.
double alpha_mass_beyond(const FilterTable& table, int L) {
  const int N = table.config.grid.size();
  const double s = table.config.exponent();
  double mass = 0.0;
  for (int k = 1; k <= table.config.grid.n(); ++k) {
    const double a = static_cast<double>(k) / N;
    const double tol = 1e-3 * std::pow(L + a, 1.0 - s) / (s - 1.0);
    mass += std::abs(table.weight[k - 1]) *
            (hurwitz_zeta(s, L + a, tol).value + hurwitz_zeta(s, L + 1.0 - a, tol).value);
  }
  if (table.weight_dc != 0.0) {
    const double tol = 1e-3 * std::pow(L + 1.0, 1.0 - s) / (s - 1.0);
    mass += std::abs(table.weight_dc) * hurwitz_zeta(s, L + 1.0, tol).value;
  }
  return mass;
}

}  // namespace

TrigSpline::TrigSpline(DiscreteSpectrum spectrum, FilterTable table, std::vector<CoeffPair> coeffs,
                       double a0, double tail_bound)
    : spectrum_(std::move(spectrum)),
      table_(std::move(table)),
      coeffs_(std::move(coeffs)),
      a0_(a0),
      tail_bound_(tail_bound),
      lerch_(table_.config.exponent()) {}

double TrigSpline::tail(double x) const {
  const int N = spectrum_.grid.size();
  const long long L = J() / N;
  const double theta = N * x;
  const double flip = table_.alternating ? kPi : 0.0;
  const double family_sign = (table_.alternating && L % 2 == 1) ? -1.0 : 1.0;
  double sum = 0.0;
  for (int k = 1; k <= spectrum_.grid.n(); ++k) {
    const double a = static_cast<double>(k) / N;
    const std::complex<double> c(spectrum_.a[k - 1], -spectrum_.b[k - 1]);
    // j = mN + k for m >= L, and j = mN - k (negative frequency) for m >= L + 1.
    const std::complex<double> plus = phase(L * N + k, x) * lerch_(theta + flip, L + a);
    const std::complex<double> minus = phase(-((L + 1) * N - k), x) * lerch_(-theta + flip, L + 1.0 - a);
    sum += family_sign * table_.weight[k - 1] * std::real(c * (plus + minus));
  }
  if (table_.weight_dc != 0.0) {
    const std::complex<double> dc = phase((L + 1) * N, x) * lerch_(theta, L + 1.0);
    sum += table_.weight_dc * spectrum_.a0 * std::real(dc);
  }
  return sum;
}

double TrigSpline::operator()(double t) const {
  if (!std::isfinite(t)) throw DomainError("spline evaluated at a non-finite point");
  const double x = reduce(t);
  const double sum = detail::harmonic_sum(x, J(), [this](long long j) {
    return std::pair<double, double>{coeffs_[j - 1].a, coeffs_[j - 1].b};
  });
  return 0.5 * a0_ + tail(x) + sum;
}

TrigSpline build_spline(const SampleVector& samples, const KernelConfig& config) {
  validate(config);
  if (!(samples.grid == config.grid)) throw DomainError("sample grid does not match the kernel grid");
  DiscreteSpectrum spectrum = discrete_coeffs(samples);
  const int N = config.grid.size();

  double amax = std::abs(spectrum.a0);
  for (std::size_t i = 0; i < spectrum.a.size(); ++i) {
    amax = std::max({amax, std::abs(spectrum.a[i]), std::abs(spectrum.b[i])});
  }

  // Class constants do not depend on J; a short table gives them.
  const FilterTable probe = make_filter_table(config, 0);
  int L = 1;
  double tail_bound = std::sqrt(2.0) * amax * alpha_mass_beyond(probe, L);
  while (tail_bound >= config.tail_tol && L < kMaxClassMultiple) {
    ++L;
    tail_bound = std::sqrt(2.0) * amax * alpha_mass_beyond(probe, L);
  }

  const long long J = static_cast<long long>(L) * N;
  FilterTable table = make_filter_table(config, J);
  std::vector<CoeffPair> coeffs(J);
  for (long long j = 1; j <= J; ++j) {
    const CoeffPair ext = extended_coeff(spectrum, j);
    const double alpha_j = table.alpha_at(j);
    coeffs[j - 1] = {alpha_j * ext.a, alpha_j * ext.b};
  }
  const double a0 = table.alpha_zero() * spectrum.a0;
  return TrigSpline(std::move(spectrum), std::move(table), std::move(coeffs), a0, tail_bound);
}

double spline_eval(const TrigSpline& spline, double t) { return spline(t); }

CoeffPair spline_fourier_coeff(const TrigSpline& spline, long long j) {
  if (j < 1) throw DomainError("spline_fourier_coeff requires j >= 1");
  if (j <= spline.J()) return spline.coeffs()[j - 1];
  const CoeffPair ext = extended_coeff(spline.spectrum(), j);
  const double alpha_j = spline.table().alpha_at(j);
  return {alpha_j * ext.a, alpha_j * ext.b};
}

std::vector<UnfoldedRow> unfolded_spectrum(const TrigSpline& spline, long long j_max) {
  if (j_max < 1) throw DomainError("unfolded_spectrum requires j_max >= 1");
  std::vector<UnfoldedRow> rows;
  rows.reserve(j_max);
  for (long long j = 1; j <= j_max; ++j) {
    const CoeffPair c = spline_fourier_coeff(spline, j);
    rows.push_back({j, c.a, c.b});
  }
  return rows;
}

FourierSeries truncated_series(const TrigSpline& spline, long long degree) {
  if (degree < 0) throw DomainError("truncated_series: negative degree");
  if (degree == 0) degree = spline.J();
  FourierSeries fs;
  fs.a0 = spline.a0();
  fs.a.resize(degree);
  fs.b.resize(degree);
  for (long long j = 1; j <= degree; ++j) {
    const CoeffPair c = spline_fourier_coeff(spline, j);
    fs.a[j - 1] = c.a;
    fs.b[j - 1] = c.b;
  }
  return fs;
}

FourierSeries interpolating_polynomial(const DiscreteSpectrum& spectrum) { return spectrum.as_series(); }

double curvature_functional(const FourierSeries& fn, int order, int resolution) {
  if (order < 0 || order % 2 != 0) throw DomainError("curvature functional needs an even order 2k");
  if (resolution < 1) throw DomainError("curvature functional needs a positive resolution");
  const FourierSeries d = fn.derivative(order);
  const double h = kTwoPi / resolution;
  double sum = 0.0;
  for (int i = 0; i < resolution; ++i) {
    const double v = d(i * h);
    sum += v * v;
  }
  return h * sum;
}

}  // namespace trigspec
