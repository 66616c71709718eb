#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "qiquad/compensated.hpp"

using namespace qiquad;

TEST(Compensated, TwoSumIsErrorFree) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-30, 30);
  for (int k = 0; k < 10000; ++k) {
    const double a = std::ldexp(mant(rng), expo(rng));
    const double b = std::ldexp(mant(rng), expo(rng));
    const auto [s, e] = two_sum(a, b);
    EXPECT_EQ(s, a + b);
    // |e| <= ulp(s)/2 and s+e reproduces a+b exactly in long double when it fits.
    EXPECT_LE(std::abs(e), std::abs(s) * 1.2e-16);
  }
}

TEST(Compensated, TwoProductRecoversFmaResidual) {
  const double a = 1.0 + std::ldexp(1.0, -30);
  const auto [p, e] = two_product(a, a);
  // (1 + 2^-30)^2 = 1 + 2^-29 + 2^-60; the last term is lost in p.
  EXPECT_EQ(p, 1.0 + std::ldexp(1.0, -29));
  EXPECT_EQ(e, std::ldexp(1.0, -60));
}

TEST(Compensated, SumSurvivesCancellation) {
  CompensatedSum s;
  for (double x : {1e16, 1.0, -1e16, 3.0, 1e-3}) s += x;
  EXPECT_DOUBLE_EQ(s.value(), 4.001);

  double naive = 0.0;
  for (double x : {1e16, 1.0, -1e16}) naive += x;
  EXPECT_EQ(naive, 0.0);
}

TEST(Compensated, DotMatchesExactRationalSum) {
  // sum_{k=1}^{1000} (1/3) * k computed with 1/3 rounded: the compensated dot
  // must equal the exact value of (rounded 1/3) * 500500 rounded once.
  std::vector<double> w(1000, 1.0 / 3.0), v(1000);
  for (int k = 0; k < 1000; ++k) v[static_cast<std::size_t>(k)] = k + 1;
  const auto got = compensated_dot(w, v);
  EXPECT_EQ(got.value(), (1.0 / 3.0) * 500500.0);
}

TEST(Compensated, RatioIsDoubleDouble) {
  const auto fifth = ratio(1.0, 5.0);
  EXPECT_EQ(fifth.hi, 0.2);
  // 0.2 in binary exceeds 1/5 by 1.11e-17.
  EXPECT_NEAR(fifth.lo, -1.1102230246251566e-17, 1e-32);
  const auto back = fifth * 5.0;
  EXPECT_EQ(back.hi, 1.0);
  EXPECT_LE(std::abs(back.lo), 1e-32);
}

TEST(Compensated, DivisionAndSubtraction) {
  const DoubleDouble third = DoubleDouble{1.0, 0.0} / 3.0;
  const DoubleDouble diff = third * 3.0 - DoubleDouble{1.0, 0.0};
  EXPECT_LE(std::abs(diff.value()), 1e-31);
}
