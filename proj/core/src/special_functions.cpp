#include "trigspec/special_functions.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <numbers>

#include "trigspec/errors.hpp"

namespace trigspec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;

// B_{2j} for j = 0..15.
constexpr std::array<double, 16> kEvenBernoulli = {
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// 1/(1 - e^{-w}) - 1/w, regular at w = 0 with radius 2*pi.
std::complex<double> regular_part(std::complex<double> w) {
  if (std::abs(w) < 1.0) {
    std::complex<double> sum = 0.5;
    std::complex<double> w2 = w * w;
    std::complex<double> pw = w;  // w^{2j-1}
    double fact = 2.0;            // (2j)!
    for (int j = 1; j < 16; ++j) {
      sum += kEvenBernoulli[j] / fact * pw;
      pw *= w2;
      fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return sum;
  }
  return 1.0 / (1.0 - std::exp(-w)) - 1.0 / w;
}

// E_1(z) by its power series; used for |z| <= 1 only.
std::complex<double> expint_e1_series(std::complex<double> z) {
  std::complex<double> sum = -kEulerGamma - std::log(z);
  std::complex<double> term = 1.0;
  for (int n = 1; n < 200; ++n) {
    term *= -z / static_cast<double>(n);
    std::complex<double> add = term / static_cast<double>(n);
    sum -= add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// (1/Gamma(s)) * int_0^inf y^{s-1} e^{-y} / (y - c) dy  for c = i*beta.
std::complex<double> pole_integral(int s, std::complex<double> c) {
  if (c == 0.0) return 1.0 / (s - 1.0);
  if (std::abs(c) <= 1.0) {
    // Polynomial division of y^{s-1} by (y - c) leaves Gamma moments and E_1.
    std::complex<double> sum = 0.0;
    std::complex<double> ci = 1.0;
    double gamma_s = factorial(s - 1);
    for (int i = 0; i <= s - 2; ++i) {
      sum += ci * (factorial(s - 2 - i) / gamma_s);
      ci *= c;
    }
    sum += ci * std::exp(-c) * expint_e1_series(-c) / gamma_s;
    return sum;
  }
  // Legendre continued fraction of w^{s-1} e^{w} Gamma(1-s, w), w = -c,
  // evaluated by modified Lentz.
  const std::complex<double> w = -c;
  const double a = 1.0 - s;
  constexpr double tiny = 1e-300;
  std::complex<double> b = w + 1.0 - a;
  std::complex<double> cc = 1.0 / tiny;
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int i = 1; i < 5000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    cc = b + an / cc;
    if (std::abs(cc) < tiny) cc = tiny;
    d = 1.0 / d;
    const std::complex<double> delta = cc * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return h;
  }
  throw NumericalError("incomplete gamma continued fraction did not converge");
}

}  // namespace

double wrap_angle(double theta) {
  double x = std::remainder(theta, 2.0 * kPi);
  if (x <= -kPi) x += 2.0 * kPi;
  return x;
}

SeriesValue hurwitz_zeta(double s, double a, double abs_tol, long max_terms) {
  if (!(s > 1.0) || !(a > 0.0)) throw DomainError("hurwitz_zeta requires s > 1 and a > 0");
  if (!(abs_tol > 0.0)) throw DomainError("hurwitz_zeta requires a positive tolerance");
  if (max_terms < 1) throw DomainError("hurwitz_zeta requires max_terms >= 1");

  long m = std::min<long>(8, max_terms);
  for (;;) {
    const double x = m + a;
    double correction = std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
    // T_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^{-s-2j+1}
    double rising = s;
    double power = std::pow(x, -s - 1.0);
    double fact = 2.0;
    double previous = INFINITY;
    bool converged = false;
    double bound = INFINITY;
    for (int j = 1; j < 16; ++j) {
      const double term = kEvenBernoulli[j] / fact * rising * power;
      if (std::abs(term) <= abs_tol) {
        converged = true;
        bound = std::abs(term);
        break;
      }
      if (std::abs(term) > previous) break;
      previous = std::abs(term);
      correction += term;
      rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
      power /= x * x;
      fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    if (converged) {
      double direct = 0.0;
      for (long i = m - 1; i >= 0; --i) direct += std::pow(i + a, -s);
      return {direct + correction, m, bound};
    }
    if (m >= max_terms) {
      throw TruncationCapError("Hurwitz zeta tail did not reach tolerance within " +
                               std::to_string(max_terms) + " terms");
    }
    m = std::min(2 * m, max_terms);
  }
}

double bernoulli_number(int n) {
  if (n < 0 || n > 30) throw DomainError("bernoulli_number: n out of range");
  if (n == 1) return -0.5;
  if (n % 2 == 1) return 0.0;
  return kEvenBernoulli[n / 2];
}

double bernoulli_polynomial(int n, double x) {
  if (n < 0 || n > 20) throw DomainError("bernoulli_polynomial: n out of range");
  // Horner over B_n(x) = sum_k C(n,k) B_k x^{n-k}
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) acc = acc * x + binomial(n, k) * bernoulli_number(k);
  return acc;
}

double power_trig_series(double p, bool cosine, double t) {
  if (!std::isfinite(t)) throw DomainError("power_trig_series: non-finite argument");
  double x = std::fmod(t, 2.0 * kPi);
  if (x < 0.0) x += 2.0 * kPi;
  const double frac = x / (2.0 * kPi);

  const double rounded = std::round(p);
  const bool integral = rounded == p && p >= 1.0 && p <= 20.0;
  const bool closed_form =
      integral && ((cosine && static_cast<int>(rounded) % 2 == 0) ||
                   (!cosine && static_cast<int>(rounded) % 2 == 1));
  auto bernoulli_form = [&] {
    const int n = static_cast<int>(rounded);
    if (!cosine && n == 1 && frac == 0.0) return 0.0;
    const int m = cosine ? n / 2 : (n - 1) / 2;
    const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
    return sign * std::pow(2.0 * kPi, n) * bernoulli_polynomial(n, frac) / (2.0 * factorial(n));
  };

  if (p <= 1.0) {
    if (closed_form) return bernoulli_form();
    throw DomainError("power_trig_series: series is not absolutely summable for p <= 1");
  }

  const double needed = std::ceil(std::pow(1e-14 * (p - 1.0), 1.0 / (1.0 - p)));
  auto direct = [&](long terms) {
    double sum = 0.0;
    for (long k = terms; k >= 1; --k) {
      const double angle = std::fmod(static_cast<double>(k) * x, 2.0 * kPi);
      sum += (cosine ? std::cos(angle) : std::sin(angle)) * std::pow(static_cast<double>(k), -p);
    }
    return sum;
  };
  if (needed <= 4096.0) return direct(static_cast<long>(needed));
  if (closed_form) return bernoulli_form();
  if (needed <= static_cast<double>(1L << 26)) return direct(static_cast<long>(needed));
  throw TruncationCapError("power_trig_series: p too close to 1 for direct summation");
}

GaussLaguerreRule gauss_laguerre(int points, double alpha) {
  if (points < 1 || !(alpha > -1.0)) throw DomainError("gauss_laguerre: bad arguments");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(points, points);
  for (int i = 0; i < points; ++i) {
    jacobi(i, i) = 2.0 * i + alpha + 1.0;
    if (i + 1 < points) {
      const double off = std::sqrt((i + 1.0) * (i + 1.0 + alpha));
      jacobi(i, i + 1) = off;
      jacobi(i + 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  GaussLaguerreRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  for (int i = 0; i < points; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v = solver.eigenvectors()(0, i);
    rule.weights[i] = v * v;
  }
  return rule;
}

LerchTail::LerchTail(int s, int points) : s_(s), rule_(gauss_laguerre(points, s - 1.0)) {
  if (s < 2) throw DomainError("LerchTail requires integer order s >= 2");
}

std::complex<double> LerchTail::far_tail(double theta, double b) const {
  // Gamma(s) * Phi = b^{-s} * int y^{s-1} e^{-y} g(y/b) dy + b^{1-s} * I(s, i b theta)
  std::complex<double> smooth = 0.0;
  for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
    const std::complex<double> w(rule_.nodes[i] / b, -theta);
    smooth += rule_.weights[i] * regular_part(w);
  }
  smooth /= b;
  const std::complex<double> pole = pole_integral(s_, std::complex<double>(0.0, b * theta));
  return std::pow(b, 1.0 - s_) * (smooth + pole);
}

std::complex<double> LerchTail::operator()(double theta, double b) const {
  if (!(b > 0.0)) throw DomainError("LerchTail requires b > 0");
  theta = wrap_angle(theta);
  // Peel off leading terms until the smooth part is well resolved.
  constexpr double kMinShift = 16.0;
  std::complex<double> head = 0.0;
  long m = 0;
  while (b + m < kMinShift) {
    head += std::polar(std::pow(b + m, -static_cast<double>(s_)), m * theta);
    ++m;
  }
  return head + std::polar(1.0, m * theta) * far_tail(theta, b + m);
}

}  // namespace trigspec
