#include <gtest/gtest.h>

#include <complex>

#include <boost/math/special_functions/zeta.hpp>

#include "test_support.hpp"
#include "trigspec/errors.hpp"
#include "trigspec/special_functions.hpp"

namespace trigspec {
namespace {

using testing::boost_hurwitz;
using testing::kPi;

TEST(HurwitzZeta, MatchesRiemannZetaAtOne) {
  for (int s : {2, 3, 4, 6, 11}) {
    EXPECT_NEAR(hurwitz_zeta(s, 1.0).value, boost::math::zeta(static_cast<double>(s)), 2e-15) << s;
  }
}

TEST(HurwitzZeta, MatchesPolygammaOracle) {
  for (int s : {2, 3, 4, 5, 11}) {
    for (double a : {0.2, 0.5, 1.0, 1.8, 7.25, 64.5}) {
      const double expected = boost_hurwitz(s, a);
      EXPECT_NEAR(hurwitz_zeta(s, a).value, expected, 1e-14 * std::max(1.0, expected)) << s << " " << a;
    }
  }
}

TEST(HurwitzZeta, ErrorBoundCoversTruth) {
  const auto v = hurwitz_zeta(2.0, 0.6, 1e-10);
  EXPECT_LE(std::abs(v.value - boost_hurwitz(2, 0.6)), v.error_bound + 1e-15);
  EXPECT_GE(v.terms, 1);
}

TEST(HurwitzZeta, RejectsBadArguments) {
  EXPECT_THROW(hurwitz_zeta(1.0, 1.0), DomainError);
  EXPECT_THROW(hurwitz_zeta(2.0, 0.0), DomainError);
  EXPECT_THROW(hurwitz_zeta(2.0, 1.0, 0.0), DomainError);
}

TEST(HurwitzZeta, TermCapRaisesTruncationError) {
  EXPECT_THROW(hurwitz_zeta(2.0, 1e-3, 1e-15, 1), TruncationCapError);
}

TEST(Bernoulli, KnownNumbers) {
  EXPECT_DOUBLE_EQ(bernoulli_number(0), 1.0);
  EXPECT_DOUBLE_EQ(bernoulli_number(1), -0.5);
  EXPECT_DOUBLE_EQ(bernoulli_number(2), 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(bernoulli_number(3), 0.0);
  EXPECT_DOUBLE_EQ(bernoulli_number(4), -1.0 / 30.0);
  EXPECT_NEAR(bernoulli_number(12), -691.0 / 2730.0, 1e-15);
  EXPECT_THROW(bernoulli_number(31), DomainError);
}

TEST(Bernoulli, PolynomialValues) {
  EXPECT_NEAR(bernoulli_polynomial(2, 0.25), 0.0625 - 0.25 + 1.0 / 6.0, 1e-15);
  for (int n : {2, 4, 6}) EXPECT_NEAR(bernoulli_polynomial(n, 0.0), bernoulli_number(n), 1e-14);
}

TEST(PowerTrigSeries, ClosedFormsMatchDirectSums) {
  for (double t : {0.0, 0.3, 1.7, 3.1, 5.9}) {
    EXPECT_NEAR(power_trig_series(2.0, true, t), testing::brute_power_trig(2.0, true, t, 2'000'000), 1e-6) << t;
    EXPECT_NEAR(power_trig_series(4.0, true, t), testing::brute_power_trig(4.0, true, t, 20'000), 1e-12) << t;
    EXPECT_NEAR(power_trig_series(3.0, false, t), testing::brute_power_trig(3.0, false, t, 20'000), 1e-8) << t;
  }
}

TEST(PowerTrigSeries, SawtoothAndZetaValues) {
  EXPECT_NEAR(power_trig_series(1.0, false, 1.0), (kPi - 1.0) / 2.0, 1e-15);
  EXPECT_EQ(power_trig_series(1.0, false, 0.0), 0.0);
  EXPECT_NEAR(power_trig_series(4.0, true, 0.0), std::pow(kPi, 4) / 90.0, 1e-14);
  EXPECT_NEAR(power_trig_series(6.0, true, 0.0), boost::math::zeta(6.0), 1e-14);
}

TEST(PowerTrigSeries, RejectsDivergentAndUnreachable) {
  EXPECT_THROW(power_trig_series(1.0, true, 0.5), DomainError);
  EXPECT_THROW(power_trig_series(0.5, false, 0.5), DomainError);
  EXPECT_THROW(power_trig_series(2.5, true, 0.5), TruncationCapError);
}

TEST(GaussLaguerre, IntegratesPolynomialsExactly) {
  // Normalized weights: sum w_i x_i^m = Gamma(alpha+1+m) / Gamma(alpha+1).
  const double alpha = 2.0;
  const auto rule = gauss_laguerre(20, alpha);
  for (int m = 0; m <= 6; ++m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], m);
    EXPECT_NEAR(sum, std::tgamma(alpha + 1 + m) / std::tgamma(alpha + 1), 1e-10 * std::tgamma(alpha + 1 + m)) << m;
  }
}

std::complex<double> brute_lerch(int s, double theta, double b, long terms) {
  std::complex<double> sum = 0.0;
  for (long m = terms - 1; m >= 0; --m) {
    sum += std::polar(std::pow(m + b, -s), m * theta);
  }
  return sum;
}

TEST(LerchTail, MatchesDirectSumsForFastDecay) {
  for (int s : {4, 5, 11}) {
    const LerchTail lt(s);
    for (double theta : {0.0, 0.4, 2.0, kPi, -1.3}) {
      for (double b : {1.0, 3.5, 20.25, 150.0}) {
        const auto expected = brute_lerch(s, theta, b, 200'000);
        const auto got = lt(theta, b);
        EXPECT_NEAR(got.real(), expected.real(), 1e-13 * std::abs(expected) + 1e-16) << s << " " << theta << " " << b;
        EXPECT_NEAR(got.imag(), expected.imag(), 1e-13 * std::abs(expected) + 1e-16) << s << " " << theta << " " << b;
      }
    }
  }
}

TEST(LerchTail, ZeroAngleIsHurwitzZeta) {
  for (int s : {2, 3, 7}) {
    const LerchTail lt(s);
    for (double b : {0.6, 2.0, 17.3}) {
      const auto got = lt(0.0, b);
      EXPECT_NEAR(got.real(), boost_hurwitz(s, b), 1e-13 * boost_hurwitz(s, b));
      EXPECT_NEAR(got.imag(), 0.0, 1e-15);
    }
  }
}

TEST(LerchTail, SlowDecayAgainstAlternatingOracle) {
  // theta = pi: sum (-1)^m (m+b)^{-2} = 2^{-2} [zeta(2, b/2) - zeta(2, (b+1)/2)].
  const LerchTail lt(2);
  for (double b : {0.3, 1.0, 5.5, 40.0}) {
    const double expected = 0.25 * (boost_hurwitz(2, b / 2) - boost_hurwitz(2, (b + 1) / 2));
    EXPECT_NEAR(lt(kPi, b).real(), expected, 1e-14 * std::abs(expected) + 1e-16) << b;
  }
}

TEST(LerchTail, RejectsBadOrderAndShift) {
  EXPECT_THROW(LerchTail(1), DomainError);
  EXPECT_THROW(LerchTail(2)(0.1, 0.0), DomainError);
}

TEST(WrapAngle, ReducesToPrincipalInterval) {
  EXPECT_NEAR(wrap_angle(3 * kPi), kPi, 1e-12);
  EXPECT_NEAR(wrap_angle(-0.5), -0.5, 1e-15);
  EXPECT_NEAR(wrap_angle(2 * kPi + 0.25), 0.25, 1e-12);
}

}  // namespace
}  // namespace trigspec
