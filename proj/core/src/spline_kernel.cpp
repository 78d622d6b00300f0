#include "trigspec/spline_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "trigspec/errors.hpp"

namespace trigspec {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_alternating(const KernelConfig& config) {
  return config.variant == SigmaVariant::SincPower && config.exponent() % 2 == 1;
}

// (|sin(pi k/N)| N / pi)^s: the class constant shared by both sinc kinds.
double sinc_class_weight(int k, const KernelConfig& config) {
  const int N = config.grid.size();
  return std::pow(std::sin(kPi * k / N) * N / kPi, config.exponent());
}

double class_weight_raw(int k, const KernelConfig& config) {
  return config.variant == SigmaVariant::InversePower ? 1.0 : sinc_class_weight(k, config);
}

struct ClassSums {
  double signed_sum;    // sum over m >= 1 of both families, with signs
  double absolute_sum;  // same with |.| terms
  long terms;
  double error;
};

// sum_{m>=1} [eps_+(m) (m+a)^{-s} + eps_-(m) (m-a)^{-s}]
ClassSums class_sums(double a, const KernelConfig& config, double zeta_tol) {
  const double s = config.exponent();
  const long cap = config.m_max_cap;
  const auto zp = hurwitz_zeta(s, 1.0 + a, zeta_tol, cap);
  const auto zm = hurwitz_zeta(s, 1.0 - a, zeta_tol, cap);
  ClassSums out{zp.value + zm.value, zp.value + zm.value, std::max(zp.terms, zm.terms),
                zp.error_bound + zm.error_bound};
  if (is_alternating(config)) {
    const double half = std::pow(2.0, -s);
    const auto p1 = hurwitz_zeta(s, 0.5 * (1.0 + a), zeta_tol, cap);
    const auto p2 = hurwitz_zeta(s, 0.5 * (2.0 + a), zeta_tol, cap);
    const auto m1 = hurwitz_zeta(s, 0.5 * (1.0 - a), zeta_tol, cap);
    const auto m2 = hurwitz_zeta(s, 0.5 * (2.0 - a), zeta_tol, cap);
    const double plus = -half * (p1.value - p2.value);
    const double minus = half * (m1.value - m2.value);
    out.signed_sum = plus + minus;
    out.terms = std::max({out.terms, p1.terms, p2.terms, m1.terms, m2.terms});
    out.error += half * (p1.error_bound + p2.error_bound + m1.error_bound + m2.error_bound);
  }
  return out;
}

double zeta_tolerance(double scale, const KernelConfig& config) {
  return std::min(config.tail_tol / (4.0 * scale), 1e-14);
}

}  // namespace

std::string_view variant_tag(SigmaVariant variant) {
  switch (variant) {
    case SigmaVariant::SincPower: return "sinc";
    case SigmaVariant::AbsSincPower: return "abs-sinc";
    case SigmaVariant::InversePower: return "inv-power";
  }
  return "?";
}

SigmaVariant parse_variant(std::string_view tag) {
  if (tag == "sinc") return SigmaVariant::SincPower;
  if (tag == "abs-sinc") return SigmaVariant::AbsSincPower;
  if (tag == "inv-power") return SigmaVariant::InversePower;
  throw DomainError("unknown sigma variant '" + std::string(tag) + "'");
}

void validate(const KernelConfig& config) {
  if (config.r < 1) throw DomainError("spline order r must be >= 1");
  if (!(config.tail_tol > 0.0)) throw DomainError("tail_tol must be > 0");
  if (config.m_max_cap < 1) throw DomainError("m_max_cap must be >= 1");
}

double sigma(long long j, const KernelConfig& config) {
  const int s = config.exponent();
  if (config.variant == SigmaVariant::InversePower) {
    if (j < 1) throw DomainError("inverse-power sigma is defined for j >= 1");
    return std::pow(static_cast<double>(j), -s);
  }
  if (j < 0) throw DomainError("sigma requires j >= 0");
  if (j == 0) return 1.0;
  const int N = config.grid.size();
  const long long q = j / N;
  const long long rho = j % N;
  if (rho == 0) return 0.0;
  // sin(pi j/N) = (-1)^q sin(pi rho/N), exact at the class level.
  const double sine = (q % 2 == 0 ? 1.0 : -1.0) * std::sin(kPi * static_cast<double>(rho) / N);
  const double sinc = sine / (kPi * static_cast<double>(j) / N);
  return config.variant == SigmaVariant::SincPower ? std::pow(sinc, s) : std::pow(std::abs(sinc), s);
}

SeriesValue normalizer(int k, const KernelConfig& config) {
  validate(config);
  const int N = config.grid.size();
  const double s = config.exponent();
  if (k < 0 || k > config.grid.n()) throw DomainError("normalizer: k outside 0..n");
  const double scale_n = std::pow(static_cast<double>(N), -s);
  if (k == 0) {
    if (config.variant != SigmaVariant::InversePower) return {1.0, 0, 0.0};
    const auto z = hurwitz_zeta(s, 1.0, zeta_tolerance(2.0 * scale_n, config), config.m_max_cap);
    return {1.0 + 2.0 * scale_n * z.value, z.terms, 2.0 * scale_n * z.error_bound};
  }
  const double w = class_weight_raw(k, config) * scale_n;
  const double a = static_cast<double>(k) / N;
  const ClassSums sums = class_sums(a, config, zeta_tolerance(w, config));
  const double lead = sigma(k, config);
  const double h = lead + w * sums.signed_sum;
  require_nondegenerate(k, h, std::abs(lead) + w * sums.absolute_sum);
  return {h, sums.terms, w * sums.error};
}

double H_factor(int k, const KernelConfig& config) {
  if (k < 1 || k > config.grid.n()) throw DomainError("H_factor: k outside 1..n");
  return normalizer(k, config).value;
}

void require_nondegenerate(int k, double h, double magnitude) {
  if (!(std::abs(h) > 1e-12 * magnitude)) throw DegenerateKernelError(k, h);
}

double FilterTable::alpha_at(long long j) const {
  if (j < 1) throw DomainError("alpha requires j >= 1");
  if (j <= static_cast<long long>(alpha.size())) return alpha[j - 1];
  const AliasClass cls = alias_class(j, config.grid.size());
  const double h = cls.k == 0 ? H_dc : H[cls.k - 1];
  return sigma(j, config) / h;
}

FilterTable make_filter_table(const KernelConfig& config, long long j_max) {
  validate(config);
  if (j_max < 0) throw DomainError("j_max must be >= 0");
  const int n = config.grid.n();
  const int N = config.grid.size();
  const double scale_n = std::pow(static_cast<double>(N), -config.exponent());
  FilterTable table;
  table.config = config;
  table.alternating = is_alternating(config);
  table.H.resize(n);
  table.weight.resize(n);
  for (int k = 1; k <= n; ++k) {
    const SeriesValue h = normalizer(k, config);
    table.H[k - 1] = h.value;
    table.weight[k - 1] = class_weight_raw(k, config) * scale_n / h.value;
    table.normalizer_error = std::max(table.normalizer_error, h.error_bound);
  }
  const SeriesValue dc = normalizer(0, config);
  table.H_dc = dc.value;
  table.weight_dc = config.variant == SigmaVariant::InversePower ? scale_n / dc.value : 0.0;
  table.alpha.resize(j_max);
  for (long long j = 1; j <= j_max; ++j) {
    const AliasClass cls = alias_class(j, N);
    const double h = cls.k == 0 ? table.H_dc : table.H[cls.k - 1];
    table.alpha[j - 1] = sigma(j, config) / h;
  }
  return table;
}

double alpha(long long j, const KernelConfig& config, const FilterTable& table) {
  if (!(table.config.grid == config.grid) || table.config.r != config.r ||
      table.config.variant != config.variant) {
    throw DomainError("filter table was built for a different kernel configuration");
  }
  return table.alpha_at(j);
}

FilterTable filter_response(const KernelConfig& config, long long j_max) {
  if (j_max < config.grid.n()) throw DomainError("filter_response requires j_max >= n");
  return make_filter_table(config, j_max);
}

}  // namespace trigspec
