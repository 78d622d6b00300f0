#include "trigspec/filon_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "trigspec/errors.hpp"

namespace trigspec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Sums {
  double c = 0.0;
  double s = 0.0;
};

// Sum of fn(t) (cos kt, sin kt) over the nodes i*h, i = first, first+step, ...
Sums node_sums(const PeriodicFn& fn, int k, long points, long first, long step) {
  const double h = kTwoPi / static_cast<double>(points);
  Sums out;
  for (long i = first; i < points; i += step) {
    const double t = h * static_cast<double>(i);
    const double v = fn(t);
    // k*i is reduced modulo points so the angle stays exact.
    const double angle = h * static_cast<double>((static_cast<long long>(k) * i) % points);
    out.c += v * std::cos(angle);
    out.s += v * std::sin(angle);
  }
  return out;
}

}  // namespace

void validate(const QuadratureConfig& qc) {
  if (qc.points < 256 || (qc.points & (qc.points - 1)) != 0) {
    throw DomainError("quadrature points must be a power of two >= 256");
  }
  if (qc.max_doublings < 0) throw DomainError("max_doublings must be >= 0");
  if (!(qc.convergence_tol > 0.0)) throw DomainError("convergence_tol must be > 0");
}

CoeffPair quad_fourier_coeff(const PeriodicFn& fn, int k, const QuadratureConfig& qc) {
  validate(qc);
  if (k < 0) throw DomainError("quad_fourier_coeff requires k >= 0");
  long points = qc.points;
  while (points < 32L * std::max(k, 1)) points *= 2;

  Sums acc = node_sums(fn, k, points, 0, 1);
  auto estimate = [&](long m) {
    const double scale = 2.0 / static_cast<double>(m);  // (1/pi) * (2pi/m)
    return CoeffPair{scale * acc.c, scale * acc.s};
  };
  CoeffPair prev = estimate(points);
  CoeffPair before = prev;
  for (int d = 0; d < qc.max_doublings; ++d) {
    points *= 2;
    // Only the new midpoints are evaluated; the old nodes are reused.
    const Sums mid = node_sums(fn, k, points, 1, 2);
    acc.c += mid.c;
    acc.s += mid.s;
    const CoeffPair next = estimate(points);
    if (std::abs(next.a - prev.a) <= qc.convergence_tol && std::abs(next.b - prev.b) <= qc.convergence_tol) {
      return next;
    }
    before = prev;
    prev = next;
  }
  const bool a_failed = std::abs(prev.a - before.a) > qc.convergence_tol;
  throw QuadratureFailure("Fourier coefficient quadrature did not converge for k=" + std::to_string(k),
                          a_failed ? before.a : before.b, a_failed ? prev.a : prev.b);
}

std::vector<FilonRow> filon_coeffs(const PeriodicFn& phi, int k_lo, int k_hi, const QuadratureConfig& qc) {
  if (k_lo < 0 || k_hi < k_lo) throw DomainError("filon_coeffs: invalid k range");
  std::vector<FilonRow> rows;
  rows.reserve(k_hi - k_lo + 1);
  for (int k = k_lo; k <= k_hi; ++k) {
    const CoeffPair c = quad_fourier_coeff(phi, k, qc);
    rows.push_back({k, c.a, c.b});
  }
  return rows;
}

double cnorm_error_bound(double sup_error) {
  if (!(sup_error >= 0.0)) throw DomainError("sup_error must be >= 0");
  return 4.0 / std::numbers::pi * sup_error;
}

double refined_error_bound(int k, int q, double diff_variation) {
  if (k < 1) throw DomainError("refined_error_bound requires k >= 1");
  if (q < 0) throw DomainError("refined_error_bound requires q >= 0");
  if (!(diff_variation >= 0.0)) throw DomainError("diff_variation must be >= 0");
  return diff_variation / (std::numbers::pi * std::pow(static_cast<double>(k), q + 1));
}

double sup_distance(const PeriodicFn& f, const PeriodicFn& g, int points) {
  if (points < 1024) throw DomainError("sup_distance needs at least 1024 points");
  const double h = kTwoPi / points;
  double best = 0.0;
  for (int i = 0; i < points; ++i) {
    const double t = h * i;
    best = std::max(best, std::abs(f(t) - g(t)));
  }
  return best;
}

double total_variation(const PeriodicFn& fn, int points) {
  if (points < 2) throw DomainError("total_variation needs at least 2 points");
  const double h = kTwoPi / points;
  const double first = fn(0.0);
  double prev = first;
  double tv = 0.0;
  for (int i = 1; i < points; ++i) {
    const double v = fn(h * i);
    tv += std::abs(v - prev);
    prev = v;
  }
  return tv + std::abs(first - prev);
}

}  // namespace trigspec
