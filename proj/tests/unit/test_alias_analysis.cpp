#include <gtest/gtest.h>

#include "test_support.hpp"
#include "trigspec/alias_analysis.hpp"
#include "trigspec/errors.hpp"

namespace trigspec {
namespace {

using testing::kPi;

TEST(FoldedCoeffs, HarmonicSumFoldsExactly) {
  const auto grid = make_grid(2);
  EXPECT_EQ(folded_coeffs(AnalyticSignal::harmonic_sum({{1, 1.0, 0.0}}), grid, 1, 1e-12).folded_value_a, 1.0);
  EXPECT_EQ(folded_coeffs(AnalyticSignal::harmonic_sum({{6, 1.0, 0.0}}), grid, 1, 1e-12).folded_value_a, 1.0);
  const auto odd = folded_coeffs(AnalyticSignal::harmonic_sum({{4, 0.0, 1.0}}), grid, 1, 1e-12);
  EXPECT_EQ(odd.folded_value_b, -1.0);
  EXPECT_EQ(odd.tail_bound, 0.0);
}

TEST(FoldedCoeffs, PowerDecayEqualsDiscreteCoefficients) {
  const auto grid = make_grid(2);
  const auto f = testing::cos_power(4.0);
  const auto d = discrete_coeffs(sample(f, grid));
  const auto fold = folded_coeffs(f, grid, 1, 1e-12);
  EXPECT_NEAR(fold.folded_value_a, d.a[0], 1e-10);
  EXPECT_LE(fold.tail_bound, 1e-12);
  EXPECT_GE(fold.m_used, 1);
}

TEST(FoldedCoeffs, FoldSumAgainstBruteForce) {
  // a_1 + sum_m [(5m+1)^{-4} + (5m-1)^{-4}], summed directly.
  double brute = 1.0;
  for (long m = 200'000; m >= 1; --m) brute += std::pow(5.0 * m + 1, -4) + std::pow(5.0 * m - 1, -4);
  EXPECT_NEAR(folded_coeffs(testing::cos_power(4.0), make_grid(2), 1, 1e-13).folded_value_a, brute, 1e-13);
}

TEST(FoldedCoeffs, DcClassUsesEveryMultipleOfN) {
  // a*_0 = a_0 + 2 sum_m a_{mN}: for cos p=2, N=5 that is 2 * 5^{-2} zeta(2).
  const auto fold = folded_coeffs(testing::cos_power(2.0), make_grid(2), 0, 1e-12);
  EXPECT_NEAR(fold.folded_value_a, 2.0 / 25.0 * kPi * kPi / 6.0, 1e-14);
  const auto d = discrete_coeffs(sample(testing::cos_power(2.0), make_grid(2)));
  EXPECT_NEAR(d.a0, fold.folded_value_a, 1e-12);
}

TEST(FoldedCoeffs, RejectsBadArguments) {
  const auto f = testing::cos_power(4.0);
  EXPECT_THROW(folded_coeffs(f, make_grid(2), 1, 0.0), DomainError);
  EXPECT_THROW(folded_coeffs(f, make_grid(2), 3, 1e-12), DomainError);
}

TEST(FoldIdentity, AllSuiteSignalsAndGrids) {
  for (const auto& entry : testing::suite()) {
    for (int n : {2, 8, 16}) {
      const auto grid = make_grid(n);
      const auto d = discrete_coeffs(sample(entry.signal, grid));
      for (int k = 0; k <= n; ++k) {
        const auto fold = folded_coeffs(entry.signal, grid, k, 1e-12);
        const double da = k == 0 ? d.a0 : d.a[k - 1];
        const double db = k == 0 ? 0.0 : d.b[k - 1];
        EXPECT_NEAR(fold.folded_value_a, da, 1e-12 + 1e-12) << entry.name << " n=" << n << " k=" << k;
        EXPECT_NEAR(fold.folded_value_b, db, 1e-12 + 1e-12) << entry.name << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(AliasBound, FirstClassValue) {
  // Reference by direct summation of (1/pi) sum_m [(5m+1)^{-2} + (5m-1)^{-2}].
  double brute = 0.0;
  for (long m = 10'000'000; m >= 1; --m) brute += std::pow(5.0 * m + 1, -2) + std::pow(5.0 * m - 1, -2);
  brute /= kPi;
  const double bound = aliasing_error_bound(1, make_grid(2), {1, 1.0}, 1e-12);
  EXPECT_NEAR(bound, 0.0454146, 5e-7);
  EXPECT_GE(bound, brute);
  EXPECT_NEAR(bound, brute, 3e-8);
}

TEST(AliasBound, ZeroVariationAndEdgeCases) {
  EXPECT_EQ(aliasing_error_bound(1, make_grid(2), {2, 0.0}, 1e-12), 0.0);
  EXPECT_TRUE(std::isinf(aliasing_error_bound(1, make_grid(2), {0, 1.0}, 1e-12)));
  EXPECT_THROW(aliasing_error_bound(0, make_grid(2), {1, 1.0}, 1e-12), DomainError);
  EXPECT_THROW(aliasing_error_bound(3, make_grid(2), {1, 1.0}, 1e-12), DomainError);
}

TEST(AliasBound, HoldsForPowerDecaySix) {
  const auto f = testing::cos_power(6.0);
  for (int n : {2, 8}) {
    const auto grid = make_grid(n);
    const auto d = discrete_coeffs(sample(f, grid));
    EXPECT_LE(std::abs(d.a[0] - true_coeff(f, 1).a), aliasing_error_bound(1, grid, f.smoothness(), 1e-12));
  }
}

TEST(AliasBound, HoldsOnEverySuitePairing) {
  for (const auto& entry : testing::suite()) {
    if (entry.signal.smoothness().r == 0) continue;  // bound is infinite
    for (int n : {2, 8, 16}) {
      const auto grid = make_grid(n);
      const auto d = discrete_coeffs(sample(entry.signal, grid));
      for (int k = 1; k <= n; ++k) {
        const auto c = true_coeff(entry.signal, k);
        const double bound = aliasing_error_bound(k, grid, entry.signal.smoothness(), 1e-12);
        EXPECT_LE(std::abs(d.a[k - 1] - c.a), bound * (1 + 1e-9) + 1e-14) << entry.name;
        EXPECT_LE(std::abs(d.b[k - 1] - c.b), bound * (1 + 1e-9) + 1e-14) << entry.name;
      }
    }
  }
}

TEST(BandComponent, Examples) {
  const auto in = AnalyticSignal::harmonic_sum({{1, 1.0, 0.0}});
  const auto out = AnalyticSignal::harmonic_sum({{6, 1.0, 0.0}});
  for (double t : {0.0, 0.9, 2.2}) {
    EXPECT_NEAR(band_component(in, 2, t), std::cos(t), 1e-15);
    EXPECT_EQ(band_component(out, 2, t), 0.0);
  }
  EXPECT_NEAR(band_component(testing::cos_power(4.0), 2, 0.0), 1.0625, 1e-15);
  EXPECT_THROW(band_component(in, 0, 0.0), DomainError);
}

TEST(ResidualComponent, Examples) {
  const auto grid = make_grid(2);
  const auto in = AnalyticSignal::harmonic_sum({{1, 1.0, 0.0}, {2, 0.0, 3.0}});
  const auto out = AnalyticSignal::harmonic_sum({{6, 1.0, 0.0}});
  testing::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const double t = rng.uniform(0, 2 * kPi);
    EXPECT_EQ(residual_component(in, grid, t, 1e-12), 0.0);
    EXPECT_NEAR(residual_component(out, grid, t, 1e-12), std::cos(6 * t), 1e-14);
  }
}

TEST(ResidualComponent, OverlayIdentityAtNodes) {
  // On the grid, f* = f_n + f_n* + (a*_0 - a_0)/2: the multiples of N are
  // constant on the nodes and are carried by the DC fold.
  const auto f = testing::cos_power(4.0);
  const auto grid = make_grid(2);
  const auto d = discrete_coeffs(sample(f, grid));
  const double dc_shift = 0.5 * (d.a0 - true_coeff(f, 0).a);
  for (int j = 0; j < grid.size(); ++j) {
    const double t = grid.node(j);
    EXPECT_NEAR(d.reconstruct(t), band_component(f, 2, t) + residual_component(f, grid, t, 1e-13) + dc_shift, 1e-12);
  }
}

TEST(ResidualComponent, MatchesDirectOutOfBandSeries) {
  const auto f = testing::cos_power(4.0);
  const auto grid = make_grid(2);
  for (double t : {0.3, 1.1, 4.0}) {
    double brute = 0.0;
    for (long k = 100'000; k >= 3; --k) {
      if (k % 5 != 0) brute += std::cos(k * t) * std::pow(static_cast<double>(k), -4);
    }
    EXPECT_NEAR(residual_component(f, grid, t, 1e-13), brute, 1e-13);
  }
}

TEST(TimeBound, ArithmeticAndErrors) {
  EXPECT_DOUBLE_EQ(time_domain_bound(4, {2, 1.0}), 0.125);
  EXPECT_EQ(time_domain_bound(4, {2, 0.0}), 0.0);
  EXPECT_THROW(time_domain_bound(4, {0, 1.0}), DomainError);
  EXPECT_THROW(time_domain_bound(0, {1, 1.0}), DomainError);
}

TEST(TimeBound, HoldsOnDenseGrid) {
  const auto f = testing::cos_power(6.0);
  const auto grid = make_grid(8);
  const auto d = discrete_coeffs(sample(f, grid));
  double sup = 0.0;
  for (int i = 0; i < 4096; ++i) {
    const double t = 2 * kPi * i / 4096;
    sup = std::max(sup, std::abs(band_component(f, 8, t) - d.reconstruct(t)));
  }
  EXPECT_LE(sup, time_domain_bound(8, f.smoothness()));
}

}  // namespace
}  // namespace trigspec
