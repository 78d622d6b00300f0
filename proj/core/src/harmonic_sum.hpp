#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace trigspec::detail {

// sum_{j=1}^{count} a_j cos(j x) + b_j sin(j x), highest harmonic first.
// cos/sin of j x = q B x + r x come from two directly computed factors.
template <class Coeff>
double harmonic_sum(double x, long long count, Coeff&& coeff) {
  constexpr int kBlock = 64;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  std::array<double, kBlock> cs{};
  std::array<double, kBlock> sn{};
  const int fine = static_cast<int>(std::min<long long>(kBlock, count + 1));
  for (int r = 0; r < fine; ++r) {
    const double angle = std::fmod(r * x, kTwoPi);
    cs[r] = std::cos(angle);
    sn[r] = std::sin(angle);
  }
  double sum = 0.0;
  for (long long q = count / kBlock; q >= 0; --q) {
    const long long base = q * kBlock;
    const double angle = std::fmod(static_cast<double>(base) * x, kTwoPi);
    const double bc = std::cos(angle);
    const double bs = std::sin(angle);
    const int top = static_cast<int>(std::min<long long>(kBlock - 1, count - base));
    for (int r = top; r >= 0; --r) {
      const long long j = base + r;
      if (j < 1) break;
      const auto [a, b] = coeff(j);
      const double c = bc * cs[r] - bs * sn[r];
      const double s = bs * cs[r] + bc * sn[r];
      sum += a * c + b * s;
    }
  }
  return sum;
}

}  // namespace trigspec::detail
