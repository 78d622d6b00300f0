#include "trigspec/sampling.hpp"

#include <cmath>
#include <numbers>

#include "trigspec/errors.hpp"

namespace trigspec {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

UniformGrid::UniformGrid(int n) : n_(n) {
  if (n < 1) throw DomainError("grid requires n >= 1");
}

double UniformGrid::spacing() const noexcept { return kTwoPi / size(); }

double UniformGrid::node(int j) const {
  if (j < 0 || j >= size()) throw DomainError("node index out of range");
  return kTwoPi * j / size();
}

std::vector<double> UniformGrid::nodes() const {
  std::vector<double> t(size());
  for (int j = 0; j < size(); ++j) t[j] = kTwoPi * j / size();
  return t;
}

UniformGrid make_grid(int n) { return UniformGrid(n); }

SampleVector sample(const std::function<double(double)>& fn, const UniformGrid& grid) {
  SampleVector out{grid, std::vector<double>(grid.size())};
  for (int j = 0; j < grid.size(); ++j) {
    out.values[j] = fn(grid.node(j));
    if (!std::isfinite(out.values[j])) throw DomainError("sampled value is not finite");
  }
  return out;
}

SampleVector sample(const AnalyticSignal& signal, const UniformGrid& grid) {
  return sample([&signal](double t) { return eval(signal, t); }, grid);
}

double DiscreteSpectrum::reconstruct(double t) const { return as_series()(t); }

FourierSeries DiscreteSpectrum::as_series() const { return FourierSeries{a0, a, b}; }

DiscreteSpectrum discrete_coeffs(const SampleVector& samples) {
  const UniformGrid& grid = samples.grid;
  const int N = grid.size();
  const int n = grid.n();
  if (static_cast<int>(samples.values.size()) != N) {
    throw DomainError("sample vector length does not match the grid");
  }
  // Tabulated cos/sin of 2*pi*m/N; every k*t_j maps to one of them.
  std::vector<double> cos_table(N);
  std::vector<double> sin_table(N);
  for (int m = 0; m < N; ++m) {
    cos_table[m] = std::cos(kTwoPi * m / N);
    sin_table[m] = std::sin(kTwoPi * m / N);
  }
  DiscreteSpectrum spec{grid, 0.0, std::vector<double>(n), std::vector<double>(n)};
  const double scale = 2.0 / N;
  double s0 = 0.0;
  for (int j = 0; j < N; ++j) s0 += samples.values[j];
  spec.a0 = scale * s0;
  // The node sums of cos k t_j and sin k t_j vanish for 1 <= k <= n, so the
  // samples can be shifted by f(t_1); constant data then gives exact zeros.
  const double shift = samples.values[0];
  for (int k = 1; k <= n; ++k) {
    double sa = 0.0;
    double sb = 0.0;
    for (int j = 1; j < N; ++j) {
      const int phase = static_cast<int>((static_cast<long long>(k) * j) % N);
      const double v = samples.values[j] - shift;
      sa += v * cos_table[phase];
      sb += v * sin_table[phase];
    }
    spec.a[k - 1] = scale * sa;
    spec.b[k - 1] = scale * sb;
  }
  return spec;
}

AliasClass alias_class(long long j, int N) {
  if (N < 3 || N % 2 == 0) throw DomainError("alias_class requires odd N >= 3");
  if (j < 0) throw DomainError("alias_class requires j >= 0");
  const int residue = static_cast<int>(j % N);
  const int n = (N - 1) / 2;
  if (residue > n) return {N - residue, 1, -1};
  return {residue, 1, 1};
}

CoeffPair extended_coeff(const DiscreteSpectrum& spectrum, long long j) {
  if (j < 1) throw DomainError("extended_coeff requires j >= 1");
  const AliasClass cls = alias_class(j, spectrum.grid.size());
  if (cls.k == 0) return {spectrum.a0, 0.0};
  return {spectrum.a[cls.k - 1], cls.sin_sign * spectrum.b[cls.k - 1]};
}

}  // namespace trigspec
