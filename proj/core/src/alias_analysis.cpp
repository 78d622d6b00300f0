#include "trigspec/alias_analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "trigspec/errors.hpp"
#include "trigspec/special_functions.hpp"

namespace trigspec {

namespace {

void require_band(int k, const UniformGrid& grid, int lowest) {
  if (k < lowest || k > grid.n()) throw DomainError("harmonic index outside the Nyquist band");
}

void require_tol(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be > 0");
}

// sum_{m>=1} g(m) for a decreasing g, with the tail past M replaced by its
// integral majorant; M grows until g(M) (the majorant's overshoot) < slack.
template <typename Term, typename TailIntegral>
double majorized_sum(Term term, TailIntegral tail_integral, double slack) {
  constexpr long kMaxTerms = 10'000'000;
  double sum = 0.0;
  long m = 1;
  for (; m < kMaxTerms; ++m) {
    const double g = term(m);
    sum += g;
    if (g < slack) break;
  }
  return sum + tail_integral(m);
}

}  // namespace

FoldReport folded_coeffs(const AnalyticSignal& signal, const UniformGrid& grid, int k, double tol) {
  require_tol(tol);
  require_band(k, grid, 0);
  const int N = grid.size();
  FoldReport report;
  report.k = k;

  if (signal.kind() == SignalKind::HarmonicSum) {
    long m_max = 1;
    for (const auto& h : signal.terms()) {
      const AliasClass cls = alias_class(h.k, N);
      if (cls.k != k) continue;
      m_max = std::max<long>(m_max, (h.k + N - 1) / N);
      if (h.k == k) {
        report.folded_value_a += h.a;
        report.folded_value_b += h.b;
      } else if (k == 0) {
        report.folded_value_a += 2.0 * h.a;
      } else {
        report.folded_value_a += h.a;
        report.folded_value_b += cls.sin_sign * h.b;
      }
    }
    report.m_used = m_max;
    report.tail_bound = 0.0;
    return report;
  }

  const double p = signal.p();
  const double scale = std::pow(static_cast<double>(N), -p);
  const double zeta_tol = std::min(tol / (2.0 * scale), 1e-15);
  const bool cosine = signal.kind() == SignalKind::PowerDecayCosine;
  if (k == 0) {
    if (cosine) {
      const auto z = hurwitz_zeta(p, 1.0, zeta_tol);
      report.folded_value_a = 2.0 * scale * z.value;
      report.m_used = z.terms;
      report.tail_bound = 2.0 * scale * z.error_bound;
    } else {
      report.m_used = 1;
    }
    return report;
  }
  const double a = static_cast<double>(k) / N;
  const auto plus = hurwitz_zeta(p, 1.0 + a, zeta_tol);
  const auto minus = hurwitz_zeta(p, 1.0 - a, zeta_tol);
  const double lead = std::pow(static_cast<double>(k), -p);
  if (cosine) {
    report.folded_value_a = lead + scale * (plus.value + minus.value);
  } else {
    report.folded_value_b = lead + scale * (plus.value - minus.value);
  }
  report.m_used = std::max(plus.terms, minus.terms);
  report.tail_bound = scale * (plus.error_bound + minus.error_bound);
  return report;
}

double aliasing_error_bound(int k, const UniformGrid& grid, const SmoothnessInfo& smoothness, double tol) {
  require_band(k, grid, 1);
  require_tol(tol);
  if (smoothness.variation == 0.0) return 0.0;
  if (smoothness.r == 0) return std::numeric_limits<double>::infinity();
  const double N = grid.size();
  const double s = smoothness.r + 1.0;
  const double c = smoothness.variation / std::numbers::pi;
  const double sum = majorized_sum(
      [&](long m) { return std::pow(m * N + k, -s) + std::pow(m * N - k, -s); },
      [&](long m) { return (std::pow(m * N + k, 1.0 - s) + std::pow(m * N - k, 1.0 - s)) / (N * (s - 1.0)); },
      tol / c);
  return c * sum;
}

double dc_aliasing_error_bound(const UniformGrid& grid, const SmoothnessInfo& smoothness, double tol) {
  require_tol(tol);
  if (smoothness.variation == 0.0) return 0.0;
  if (smoothness.r == 0) return std::numeric_limits<double>::infinity();
  const double N = grid.size();
  const double s = smoothness.r + 1.0;
  const double c = 2.0 * smoothness.variation / std::numbers::pi;
  const double sum = majorized_sum([&](long m) { return std::pow(m * N, -s); },
                                   [&](long m) { return std::pow(m * N, 1.0 - s) / (N * (s - 1.0)); },
                                   tol / c);
  return c * sum;
}

double band_component(const AnalyticSignal& signal, int n, double t) {
  if (n < 1) throw DomainError("band_component requires n >= 1");
  if (!std::isfinite(t)) throw DomainError("band_component: non-finite t");
  double sum = 0.5 * true_coeff(signal, 0).a;
  for (int k = n; k >= 1; --k) {
    const CoeffPair c = true_coeff(signal, k);
    sum += c.a * std::cos(k * t) + c.b * std::sin(k * t);
  }
  return sum;
}

double residual_component(const AnalyticSignal& signal, const UniformGrid& grid, double t, double tol) {
  require_tol(tol);
  if (!std::isfinite(t)) throw DomainError("residual_component: non-finite t");
  const int n = grid.n();
  const int N = grid.size();
  if (signal.kind() == SignalKind::HarmonicSum) {
    double sum = 0.0;
    for (const auto& h : signal.terms()) {
      if (h.k <= n || h.k % N == 0) continue;
      sum += h.a * std::cos(h.k * t) + h.b * std::sin(h.k * t);
    }
    return sum;
  }
  // Out-of-band part of the power series minus its DC family, whose phases
  // are those of the same series at argument N t.
  const bool cosine = signal.kind() == SignalKind::PowerDecayCosine;
  const double p = signal.p();
  const double dc_family = std::pow(static_cast<double>(N), -p) * power_trig_series(p, cosine, N * t);
  return eval(signal, t) - band_component(signal, n, t) - dc_family;
}

double time_domain_bound(int n, const SmoothnessInfo& smoothness) {
  if (n < 1) throw DomainError("time_domain_bound requires n >= 1");
  if (smoothness.r < 1) throw DomainError("time_domain_bound requires r >= 1");
  return 2.0 * smoothness.variation / std::pow(static_cast<double>(n), smoothness.r);
}

}  // namespace trigspec
