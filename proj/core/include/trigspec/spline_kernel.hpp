#pragma once

#include <string_view>
#include <vector>

#include "trigspec/sampling.hpp"
#include "trigspec/special_functions.hpp"

namespace trigspec {

/// Generating factor families sigma_j(r):
///   SincPower     [sinc(pi j/N)]^{1+r}
///   AbsSincPower  |sinc(pi j/N)|^{1+r}
///   InversePower  j^{-(1+r)}
enum class SigmaVariant { SincPower, AbsSincPower, InversePower };

/// CLI/JSON tags: "sinc", "abs-sinc", "inv-power".
std::string_view variant_tag(SigmaVariant variant);
SigmaVariant parse_variant(std::string_view tag);

struct KernelConfig {
  int r = 1;
  UniformGrid grid{1};
  SigmaVariant variant = SigmaVariant::AbsSincPower;
  double tail_tol = 1e-12;
  long m_max_cap = 1'000'000;

  int exponent() const noexcept { return r + 1; }
};

void validate(const KernelConfig& config);

/// sigma_j(r); sinc(0) = 1 and sigma_{mN} = 0 exactly for the sinc kinds.
double sigma(long long j, const KernelConfig& config);

/// Per-class normalizer H(r,k) = sigma_k + sum_{m>=1} [sigma_{mN+k} + sigma_{mN-k}]
/// for k = 1..n, or the DC normalizer 1 + 2 sum_{m>=1} sigma_{mN} for k = 0.
///
/// Within a class every sinc factor is a fixed multiple of |j|^{-(1+r)}
/// (with alternating sign for the signed variant at odd exponent), so the
/// series are Hurwitz zeta values; they are summed directly up to M terms with
/// an Euler-Maclaurin remainder whose bound is reported.
SeriesValue normalizer(int k, const KernelConfig& config);

/// H(r,k) for 1 <= k <= n. Throws DegenerateKernelError when the signed
/// series cancels to within 1e-12 of its absolute magnitude.
double H_factor(int k, const KernelConfig& config);

/// Throws DegenerateKernelError if |h| <= 1e-12 * magnitude.
void require_nondegenerate(int k, double h, double magnitude);

/// Tabulated filter factors alpha(r,j) = sigma_j / H(r, k(j)), j = 1..j_max.
///
/// `weight[k-1]` is the class constant c_k with alpha_{mN+-k} = c_k * sign * (m +- k/N)^{-(1+r)},
/// sign being (-1)^m (resp. (-1)^{m+1}) for the signed sinc with odd exponent
/// and +1 otherwise.
struct FilterTable {
  KernelConfig config;
  std::vector<double> H;       ///< H[k-1], k = 1..n
  double H_dc = 1.0;
  std::vector<double> alpha;   ///< alpha[j-1], j = 1..j_max
  std::vector<double> weight;  ///< class constants c_k
  double weight_dc = 0.0;      ///< alpha_{mN} = weight_dc * m^{-(1+r)}
  bool alternating = false;
  double normalizer_error = 0.0;

  /// alpha(r,j) for any j >= 1, tabulated or not.
  double alpha_at(long long j) const;
  /// 1/H_dc: factor on the constant term a*_0/2.
  double alpha_zero() const noexcept { return 1.0 / H_dc; }
};

FilterTable make_filter_table(const KernelConfig& config, long long j_max);

/// alpha(r,j) = sigma_j(r) / H(r, k(j)).
double alpha(long long j, const KernelConfig& config, const FilterTable& table);

/// Amplitude response alpha(r,j), j = 1..j_max; requires j_max >= n.
FilterTable filter_response(const KernelConfig& config, long long j_max);

}  // namespace trigspec
