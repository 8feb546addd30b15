#include "ardlboot/adf.hpp"
#include "ardlboot/dgp.hpp"
#include "ardlboot/error.hpp"

#include <gtest/gtest.h>

using namespace ardlboot;

namespace {

DgpConfig with_axx(const Eigen::MatrixXd& axx) {
  DgpConfig c = reference_config();
  c.A_xx = axx;
  return c;
}

int numeric_rank(const Eigen::MatrixXd& m) {
  const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
  return static_cast<int>((s.array() > 1e-8).count());
}

}  // namespace

TEST(DgpParams, ReferenceBlocks) {
  const ConditionalParams a = derive_conditional_params(with_axx(axx_cointegrated()));
  EXPECT_NEAR(a.omega(0), 0.404444444444444, 1e-12);
  EXPECT_NEAR(a.omega(1), 0.641333333333333, 1e-12);
  EXPECT_NEAR(a.a_c_yx(0), 0.493826666666667, 1e-12);
  EXPECT_NEAR(a.a_c_yx(1), 0.493826666666667, 1e-12);
  EXPECT_NEAR(a.a_tilde_yx(0), 0.6 - a.a_c_yx(0), 0.0);
  EXPECT_NEAR(a.a_tilde_yx(0), 0.1062, 1e-4);
  EXPECT_NEAR(a.a_tilde_yx(1), -0.0938, 1e-4);

  const ConditionalParams b = derive_conditional_params(with_axx(axx_stationary()));
  EXPECT_NEAR(b.a_c_yx(0), 0.442, 1e-12);
  EXPECT_NEAR(b.a_c_yx(1), 0.0306222222222222, 1e-12);
  EXPECT_NEAR(b.a_tilde_yx(0), 0.158, 1e-12);
  EXPECT_NEAR(b.a_tilde_yx(1), 0.369377777777778, 1e-12);

  // gamma_{y.x,1} = gamma_{y,1} - G_(x)1' w
  EXPECT_NEAR(a.gamma_yx[0](0), 0.559556, 1e-6);
  EXPECT_NEAR(a.gamma_yx[0](1), 0.31373, 1e-5);
  EXPECT_NEAR(a.gamma_yx[0](2), 0.071733, 1e-6);
  EXPECT_NEAR(a.sigma_y_x, 1.69 - a.omega.dot(Eigen::Vector2d(0.39, 0.52)), 1e-14);
}

TEST(DgpParams, InterceptByCase) {
  DgpConfig c = reference_config();
  c.det_case = DeterministicCase::III;
  EXPECT_DOUBLE_EQ(derive_conditional_params(c).alpha0_y, 0.3);
  c.det_case = DeterministicCase::II;
  const ConditionalParams p = derive_conditional_params(c);
  EXPECT_NEAR(p.alpha0_y, c.a_yy * 0.2 + p.a_tilde_yx.dot(Eigen::Vector2d(0.3, 0.4)), 1e-14);
}

TEST(DgpParams, RankIdentity) {
  // rk(A~) = 1 + rk(A_xx) whenever a_yy != 0
  for (DgpId id : {DgpId::H1, DgpId::L1, DgpId::D5, DgpId::D6}) {
    const DgpConfig c = configure_dgp(reference_config(), id);
    const ConditionalParams p = derive_conditional_params(c);
    EXPECT_EQ(numeric_rank(p.A_tilde), 1 + numeric_rank(c.A_xx)) << to_string(id);
  }
}

TEST(DgpParams, DegenerateLevels) {
  auto params = [](DgpId id) {
    const DgpConfig c = configure_dgp(reference_config(), id);
    return std::pair{c, derive_conditional_params(c)};
  };
  for (DgpId id : {DgpId::A3, DgpId::B3, DgpId::D6}) {
    EXPECT_LT(params(id).second.a_tilde_yx.norm(), 1e-15) << to_string(id);
  }
  for (DgpId id : {DgpId::A4, DgpId::B4}) {
    const auto [c, p] = params(id);
    EXPECT_EQ(c.a_yx_uc.norm(), 0.0);
    EXPECT_LT((p.a_tilde_yx + p.a_c_yx).norm(), 1e-15);
  }
  EXPECT_EQ(params(DgpId::D5).first.a_yx_uc.norm(), 0.0);
  EXPECT_EQ(params(DgpId::B2).first.A_xx, axx_stationary());
  EXPECT_EQ(params(DgpId::D6).first.A_xx, axx_cointegrated());
  EXPECT_DOUBLE_EQ(params(DgpId::L1).first.a_yy, 0.35);
}

TEST(DgpParams, SingularSigmaXX) {
  DgpConfig c = reference_config();
  c.sigma << 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 1.0, 1.0;
  try {
    derive_conditional_params(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SingularSigmaXX);
    EXPECT_EQ(e.family(), ErrorFamily::Estimation);
  }
}

TEST(DgpNames, RoundTrip) {
  for (DgpId id : all_dgps()) EXPECT_EQ(dgp_from_string(to_string(id)), id);
  EXPECT_EQ(all_dgps().size(), 10u);
  EXPECT_FALSE(dgp_from_string("7").has_value());
}

TEST(Simulate, ShapeAndDeterminism) {
  DgpConfig c = reference_config();
  c.T = 200;
  c.seed = 7;
  const SimulatedPath a = simulate_path(configure_dgp(c, DgpId::H1));
  EXPECT_EQ(a.frame.rows(), 200);
  EXPECT_EQ(a.frame.names(), (std::vector<std::string>{"y", "x1", "x2"}));
  EXPECT_TRUE(a.frame.values().allFinite());
  const SimulatedPath b = simulate_path(configure_dgp(c, DgpId::H1));
  EXPECT_EQ(a.frame.values(), b.frame.values());
  c.seed = 8;
  EXPECT_NE(simulate_dgp(c, DgpId::H1).values(), a.frame.values());
}

TEST(Simulate, RecursionHolds) {
  DgpConfig c = configure_dgp(reference_config(), DgpId::B2);
  c.T = 60;
  c.seed = 3;
  const SimulatedPath s = simulate_path(c);
  const ConditionalParams p = derive_conditional_params(c);
  const Eigen::MatrixXd& z = s.frame.values();
  auto dz = [&](Eigen::Index t) { return Eigen::VectorXd((z.row(t) - z.row(t - 1)).transpose()); };
  for (Eigen::Index t = 3; t < z.rows(); ++t) {
    const Eigen::VectorXd d = dz(t);
    Eigen::VectorXd dx = c.A_xx * c.mu.tail(2) - c.A_xx * z.row(t - 1).tail(2).transpose() +
                         s.eps.row(t).tail(2).transpose();
    double dy = p.alpha0_y - c.a_yy * z(t - 1, 0) - p.a_tilde_yx.dot(z.row(t - 1).tail(2)) + s.nu(t);
    for (int j = 1; j <= 2; ++j) {
      dx += c.gamma[j - 1].bottomRows(2) * dz(t - j);
      dy += p.gamma_yx[j - 1].dot(dz(t - j));
    }
    dy += p.omega.dot(dx);
    EXPECT_NEAR(d(0), dy, 1e-9);
    EXPECT_LT((d.tail(2) - dx).norm(), 1e-9);
    EXPECT_NEAR(s.nu(t), s.eps(t, 0) - p.omega.dot(s.eps.row(t).tail(2)), 1e-12);
  }
}

TEST(Simulate, StationaryDependentUnderDgp5) {
  DgpConfig c = reference_config();
  c.T = 5000;
  c.seed = 11;
  const TimeSeriesFrame f = simulate_dgp(c, DgpId::D5);
  const AdfResult r = adf_test(f.values().col(0), 2, AdfDeterministic::Drift);
  EXPECT_LT(r.statistic, default_adf_critical_values(AdfDeterministic::Drift).pct1);
}

TEST(Simulate, ConfigValidation) {
  DgpConfig c = reference_config();
  c.burn_in = 1;
  EXPECT_THROW(simulate_path(c), Error);
  c = reference_config();
  c.mu = Eigen::Vector2d(0, 0);
  EXPECT_THROW(simulate_path(c), Error);
  c = reference_config();
  c.sigma(0, 1) = 0.5;
  EXPECT_THROW(c.validate(), Error);
}

TEST(MonteCarlo, SmallRunIsReproducible) {
  MonteCarloConfig mc;
  mc.dgp = DgpId::H1;
  mc.repetitions = 4;
  mc.base.T = 80;
  mc.base.seed = 5;
  mc.boot.replicates = 99;
  const MonteCarloResult a = monte_carlo(mc);
  EXPECT_EQ(a.completed + a.failures, 4);
  ASSERT_EQ(a.tests.size(), 3u);
  for (const auto& t : a.tests) {
    EXPECT_EQ(t.completed, a.completed);
    EXPECT_NEAR(t.rejection_rate, static_cast<double>(t.rejections) / t.completed, 1e-15);
    EXPECT_LE(t.dist_q05, t.dist_q50);
    EXPECT_LE(t.dist_q50, t.dist_q95);
  }
  mc.boot.threads = 3;
  const MonteCarloResult b = monte_carlo(mc);
  for (std::size_t i = 0; i < a.tests.size(); ++i) {
    EXPECT_EQ(a.tests[i].rejections, b.tests[i].rejections);
    EXPECT_EQ(a.tests[i].dist_mean, b.tests[i].dist_mean);
  }
}
