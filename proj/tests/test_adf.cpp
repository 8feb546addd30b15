#include "ardlboot/adf.hpp"
#include "ardlboot/error.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ardlboot;

namespace {

Eigen::VectorXd ar1(double phi, int T, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  Eigen::VectorXd y(T);
  y(0) = n(rng);
  for (int t = 1; t < T; ++t) y(t) = phi * y(t - 1) + n(rng);
  return y;
}

}  // namespace

TEST(Adf, MatchesOracle) {
  const Eigen::VectorXd y = ar1(0.5, 500, 1);
  const AdfResult r = adf_test(y, 0, AdfDeterministic::Drift);
  EXPECT_TRUE(oracle::close(r.statistic, oracle::adf(y, 0, 1)));
  EXPECT_EQ(r.n_effective, 499);
  for (int lags = 0; lags <= 3; ++lags) {
    for (int det = 0; det <= 2; ++det) {
      const AdfResult s = adf_test(y, lags, static_cast<AdfDeterministic>(det));
      EXPECT_TRUE(oracle::close(s.statistic, oracle::adf(y, lags, det)));
      EXPECT_EQ(s.n_effective, 500 - lags - 1);
    }
  }
}

TEST(Adf, StationarySeriesRejects) {
  EXPECT_LT(adf_test(ar1(0.5, 500, 2), 0, AdfDeterministic::Drift).statistic, -2.86);
}

TEST(Adf, LocationAndTrendInvariance) {
  const Eigen::VectorXd y = ar1(0.9, 120, 3);
  const Eigen::VectorXd shifted = y.array() + 17.0;
  Eigen::VectorXd trended = y;
  for (int t = 0; t < y.size(); ++t) trended(t) += 3.0 - 0.25 * t;
  for (int lags = 0; lags <= 3; ++lags) {
    EXPECT_NEAR(adf_test(shifted, lags, AdfDeterministic::Drift).statistic,
                adf_test(y, lags, AdfDeterministic::Drift).statistic, 1e-9);
    EXPECT_NEAR(adf_test(trended, lags, AdfDeterministic::DriftTrend).statistic,
                adf_test(y, lags, AdfDeterministic::DriftTrend).statistic, 1e-8);
  }
}

TEST(Adf, MoreLagsNeverLengthenTheSample) {
  const Eigen::VectorXd y = ar1(0.2, 40, 4);
  int prev = 1 << 30;
  for (int lags = 0; lags <= 5; ++lags) {
    const int n = adf_test(y, lags, AdfDeterministic::None).n_effective;
    EXPECT_LT(n, prev);
    prev = n;
  }
}

TEST(Adf, Errors) {
  auto code = [](const Eigen::VectorXd& y, int lags, AdfDeterministic d) {
    try {
      adf_test(y, lags, d);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Io;
  };
  EXPECT_EQ(code(Eigen::VectorXd::Constant(30, 2.0), 1, AdfDeterministic::Drift),
            Errc::RankDeficient);
  EXPECT_EQ(code(Eigen::VectorXd::Constant(30, 2.0), 0, AdfDeterministic::Drift),
            Errc::RankDeficient);
  EXPECT_EQ(code(ar1(0.5, 6, 5), 2, AdfDeterministic::Drift), Errc::SampleTooShort);
  EXPECT_EQ(code(ar1(0.5, 50, 5), -1, AdfDeterministic::Drift), Errc::InvalidArgument);
}

TEST(Adf, CriticalValueDefaults) {
  EXPECT_DOUBLE_EQ(default_adf_critical_values(AdfDeterministic::Drift).pct5, -2.86);
  EXPECT_DOUBLE_EQ(default_adf_critical_values(AdfDeterministic::None).pct5, -1.95);
  EXPECT_DOUBLE_EQ(default_adf_critical_values(AdfDeterministic::DriftTrend).pct5, -3.41);
  for (auto d : {AdfDeterministic::None, AdfDeterministic::Drift, AdfDeterministic::DriftTrend}) {
    const auto cv = default_adf_critical_values(d);
    EXPECT_LT(cv.pct1, cv.pct5);
    EXPECT_LT(cv.pct5, cv.pct10);
    EXPECT_EQ(adf_deterministic_from_string(to_string(d)), d);
  }
}
