#include "trigspec/signal_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "trigspec/errors.hpp"
#include "trigspec/special_functions.hpp"

namespace trigspec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

FourierSeries harmonic_series(std::span<const Harmonic> terms) {
  FourierSeries fs;
  int degree = 0;
  for (const auto& h : terms) degree = std::max(degree, h.k);
  fs.a.assign(degree, 0.0);
  fs.b.assign(degree, 0.0);
  for (const auto& h : terms) {
    if (h.k == 0) {
      fs.a0 = h.a;
    } else {
      fs.a[h.k - 1] = h.a;
      fs.b[h.k - 1] = h.b;
    }
  }
  return fs;
}

// Exact total variation of a trigonometric polynomial over one period: the
// grid is augmented with every sign change of the derivative, refined by
// bisection, so the sampled points include all extrema.
double trig_polynomial_variation(const FourierSeries& g) {
  if (g.degree() == 0) return 0.0;
  const FourierSeries dg = g.derivative(1);
  const int points = std::max<int>(4096, 64 * static_cast<int>(g.degree()));
  const double h = kTwoPi / points;
  std::vector<double> knots;
  knots.reserve(points + 64);
  double prev = dg(0.0);
  for (int i = 0; i < points; ++i) {
    const double t0 = i * h;
    knots.push_back(t0);
    const double t1 = (i + 1) * h;
    const double next = dg(t1);
    if ((prev < 0.0 && next > 0.0) || (prev > 0.0 && next < 0.0)) {
      double lo = t0;
      double hi = t1;
      double flo = prev;
      for (int it = 0; it < 80 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = dg(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      knots.push_back(0.5 * (lo + hi));
    }
    prev = next;
  }
  std::sort(knots.begin(), knots.end());
  double total = 0.0;
  double last = g(knots.front());
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const double v = g(knots[i]);
    total += std::abs(v - last);
    last = v;
  }
  total += std::abs(g(kTwoPi) - last);
  return total;
}

void require_finite(double t) {
  if (!std::isfinite(t)) throw DomainError("signal evaluated at a non-finite point");
}

void validate_smoothness(const SmoothnessInfo& sm) {
  if (sm.r < 0) throw DomainError("smoothness order r must be >= 0");
  if (!(sm.variation >= 0.0) || !std::isfinite(sm.variation)) {
    throw DomainError("variation must be finite and >= 0");
  }
}

// Sign and trig family of d^q/dt^q applied to cos(kt) or sin(kt).
struct DerivativePattern {
  double sign;
  bool cosine;
};

DerivativePattern derivative_pattern(bool cosine, int order) {
  static constexpr DerivativePattern kCos[4] = {{1, true}, {-1, false}, {-1, true}, {1, false}};
  static constexpr DerivativePattern kSin[4] = {{1, false}, {1, true}, {-1, false}, {-1, true}};
  return cosine ? kCos[order % 4] : kSin[order % 4];
}

}  // namespace

AnalyticSignal AnalyticSignal::harmonic_sum(std::vector<Harmonic> terms, int r,
                                            std::optional<double> variation) {
  std::set<int> seen;
  for (const auto& h : terms) {
    if (h.k < 0) throw DomainError("harmonic index must be >= 0");
    if (!seen.insert(h.k).second) throw DomainError("duplicate harmonic index " + std::to_string(h.k));
    if (!std::isfinite(h.a) || !std::isfinite(h.b)) throw DomainError("harmonic coefficients must be finite");
    if (h.k == 0 && h.b != 0.0) throw DomainError("the constant term has no sine coefficient");
  }
  if (r < 0) throw DomainError("smoothness order r must be >= 0");
  std::sort(terms.begin(), terms.end(), [](const Harmonic& x, const Harmonic& y) { return x.k < y.k; });

  AnalyticSignal s;
  s.kind_ = SignalKind::HarmonicSum;
  s.terms_ = std::move(terms);
  s.smoothness_.r = r;
  s.smoothness_.variation =
      variation ? *variation : trig_polynomial_variation(harmonic_series(s.terms_).derivative(r));
  validate_smoothness(s.smoothness_);
  return s;
}

AnalyticSignal AnalyticSignal::power_decay_cosine(double p, SmoothnessInfo smoothness) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("power-decay exponent must satisfy p > 1");
  validate_smoothness(smoothness);
  AnalyticSignal s;
  s.kind_ = SignalKind::PowerDecayCosine;
  s.p_ = p;
  s.smoothness_ = smoothness;
  return s;
}

AnalyticSignal AnalyticSignal::power_decay_sine(double p, SmoothnessInfo smoothness) {
  AnalyticSignal s = power_decay_cosine(p, smoothness);
  s.kind_ = SignalKind::PowerDecaySine;
  return s;
}

int AnalyticSignal::max_harmonic() const noexcept {
  return terms_.empty() ? 0 : terms_.back().k;
}

double AnalyticSignal::operator()(double t) const { return eval(*this, t); }

double eval(const AnalyticSignal& signal, double t) { return eval_derivative(signal, 0, t); }

double eval_derivative(const AnalyticSignal& signal, int order, double t) {
  require_finite(t);
  if (order < 0) throw DomainError("derivative order must be >= 0");
  if (signal.kind() == SignalKind::HarmonicSum) {
    double x = std::fmod(t, kTwoPi);
    double sum = 0.0;
    for (const auto& h : signal.terms()) {
      if (h.k == 0) {
        if (order == 0) sum += 0.5 * h.a;
        continue;
      }
      const double angle = std::fmod(h.k * x, kTwoPi);
      const double scale = std::pow(static_cast<double>(h.k), order);
      const auto pc = derivative_pattern(true, order);
      const auto ps = derivative_pattern(false, order);
      sum += scale * (h.a * pc.sign * (pc.cosine ? std::cos(angle) : std::sin(angle)) +
                      h.b * ps.sign * (ps.cosine ? std::cos(angle) : std::sin(angle)));
    }
    return sum;
  }
  const auto pattern = derivative_pattern(signal.kind() == SignalKind::PowerDecayCosine, order);
  return pattern.sign * power_trig_series(signal.p() - order, pattern.cosine, t);
}

CoeffPair true_coeff(const AnalyticSignal& signal, int k) {
  if (k < 0) throw DomainError("true_coeff: k must be >= 0");
  switch (signal.kind()) {
    case SignalKind::HarmonicSum:
      for (const auto& h : signal.terms()) {
        if (h.k == k) return {h.a, h.b};
      }
      return {};
    case SignalKind::PowerDecayCosine:
      return k == 0 ? CoeffPair{} : CoeffPair{std::pow(static_cast<double>(k), -signal.p()), 0.0};
    case SignalKind::PowerDecaySine:
      return k == 0 ? CoeffPair{} : CoeffPair{0.0, std::pow(static_cast<double>(k), -signal.p())};
  }
  return {};
}

double coefficient_bound(const SmoothnessInfo& smoothness, int k) {
  if (k < 1) throw DomainError("coefficient_bound is defined for k >= 1");
  return smoothness.variation / (std::numbers::pi * std::pow(static_cast<double>(k), smoothness.r + 1));
}

double measure_variation(const AnalyticSignal& signal, int order, int points) {
  if (points < 2) throw DomainError("measure_variation needs at least two points");
  const double h = kTwoPi / points;
  const double first = eval_derivative(signal, order, 0.0);
  double last = first;
  double total = 0.0;
  for (int i = 1; i < points; ++i) {
    const double v = eval_derivative(signal, order, i * h);
    total += std::abs(v - last);
    last = v;
  }
  return total + std::abs(first - last);
}

FourierSeries to_fourier_series(const AnalyticSignal& signal, int degree) {
  if (signal.kind() == SignalKind::HarmonicSum) return harmonic_series(signal.terms());
  FourierSeries fs;
  fs.a.assign(degree, 0.0);
  fs.b.assign(degree, 0.0);
  for (int k = 1; k <= degree; ++k) {
    const auto c = true_coeff(signal, k);
    fs.a[k - 1] = c.a;
    fs.b[k - 1] = c.b;
  }
  return fs;
}

}  // namespace trigspec
