#include "ardlboot/error.hpp"
#include "ardlboot/vecm.hpp"

#include "checks.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace ardlboot;

TEST(Vecm, TermLayout) {
  std::mt19937_64 rng(1);
  const TimeSeriesFrame f = checks::random_frame(rng, 50, 2);
  std::vector<std::string> names;
  for (const auto& t : vecm_terms(f, 3, true)) names.push_back(term_name(t, f.names()));
  EXPECT_EQ(names, (std::vector<std::string>{"const", "y(-1)", "x1(-1)", "x2(-1)", "D.y(-1)",
                                             "D.x1(-1)", "D.x2(-1)", "D.y(-2)", "D.x1(-2)",
                                             "D.x2(-2)"}));
}

TEST(Vecm, MatchesOracleAndUnpacksBlocks) {
  std::mt19937_64 rng(2);
  const TimeSeriesFrame f = checks::random_frame(rng, 80, 2);
  const VecmFit fit = estimate_vecm_marginal(f, 2, false);
  const auto ref = oracle::vecm(f.values(), 2, false, 2);
  ASSERT_EQ(fit.residuals.rows(), 78);
  for (int eq = 0; eq < 2; ++eq) {
    // const, x1(-1), x2(-1), D.y(-1), D.x1(-1), D.x2(-1)
    EXPECT_TRUE(oracle::close(fit.alpha0x(eq), ref[eq].beta[0]));
    EXPECT_TRUE(oracle::close(fit.A_xx(eq, 0), -ref[eq].beta[1]));
    EXPECT_TRUE(oracle::close(fit.A_xx(eq, 1), -ref[eq].beta[2]));
    for (int v = 0; v < 3; ++v) EXPECT_TRUE(oracle::close(fit.gamma_x[0](eq, v), ref[eq].beta[3 + v]));
    EXPECT_EQ(fit.A_xy(eq), 0.0);
    EXPECT_TRUE(oracle::close(fit.equations[eq].rss, ref[eq].rss));
  }
}

TEST(Vecm, PredictPlusResidualIsTheDifference) {
  std::mt19937_64 rng(3);
  const TimeSeriesFrame f = checks::random_frame(rng, 60, 3);
  const VecmFit fit = estimate_vecm_marginal(f, 3, true, 4);
  const Eigen::MatrixXd& z = f.values();
  for (Eigen::Index r = 0; r < fit.residuals.rows(); ++r) {
    const Eigen::Index t = 4 + r;
    const Eigen::VectorXd dx = (z.row(t).tail(3) - z.row(t - 1).tail(3)).transpose();
    EXPECT_LT((fit.predict(z, t) + fit.residuals.row(r).transpose() - dx).norm(), 1e-12);
  }
  EXPECT_NE(fit.A_xy.norm(), 0.0);
}

TEST(Vecm, Errors) {
  std::mt19937_64 rng(4);
  const TimeSeriesFrame f = checks::random_frame(rng, 12, 2);
  EXPECT_THROW(estimate_vecm_marginal(f, 0), Error);
  EXPECT_THROW(estimate_vecm_marginal(f, 2, false, 1), Error);
  try {
    estimate_vecm_marginal(f, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SampleTooShort);
  }
}
