#pragma once

// Simulator for the trivariate conditional VECM used in the size/power study:
//
//   dx_t = A_xx mu_x - A_xx x_{t-1} + sum_j G_(x)j dz_{t-j} + e_xt
//   dy_t = a0_y - a_yy y_{t-1} - a~' x_{t-1} + sum_j g_{y.x,j}' dz_{t-j} + w' dx_t + v_t
//
// with e_t ~ N(0, Sigma), w = Sigma_xx^-1 sigma_xy, v_t = e_yt - w' e_xt and
// a~ = a_yx(UC) - w' A_xx.

#include "ardlboot/ardl.hpp"
#include "ardlboot/bootstrap.hpp"
#include "ardlboot/frame.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ardlboot {

enum class DgpId { H1, L1, A2, B2, A3, B3, A4, B4, D5, D6 };

std::string_view to_string(DgpId id);
std::optional<DgpId> dgp_from_string(std::string_view name);
/// All ten DGPs in table order.
std::vector<DgpId> all_dgps();

struct DgpConfig {
  Eigen::MatrixXd sigma;                // (K+1) x (K+1), ordered (y, x)
  std::vector<Eigen::MatrixXd> gamma;   // unconditional short-run blocks G_1..G_{p-1}
  Eigen::MatrixXd A_xx;                 // K x K
  double a_yy = 0.0;
  Eigen::VectorXd a_yx_uc;              // K
  Eigen::VectorXd mu;                   // K+1
  DeterministicCase det_case = DeterministicCase::III;
  double alpha0y_unrestricted = 0.3;    // case III intercept
  int T = 200;
  int burn_in = 50;
  std::uint64_t seed = 0;

  int num_regressors() const { return static_cast<int>(A_xx.rows()); }
  void validate() const;
};

/// The covariance, short-run matrices and mean of the reference design, with
/// the level parameters of DGP 1H.
DgpConfig reference_config();
Eigen::MatrixXd axx_cointegrated();  // case A, rank 1
Eigen::MatrixXd axx_stationary();    // case B, rank 2

struct ConditionalParams {
  Eigen::VectorXd omega;
  double sigma_y_x = 0.0;
  std::vector<Eigen::VectorXd> gamma_yx;  // one K+1 vector per short-run lag
  Eigen::VectorXd a_c_yx;
  Eigen::VectorXd a_tilde_yx;
  Eigen::VectorXd alpha0_c;  // A~ mu
  Eigen::MatrixXd A_tilde;
  double alpha0_y = 0.0;     // intercept actually used for dy_t
};

ConditionalParams derive_conditional_params(const DgpConfig& config);

/// Sets a_yy, a_yx(UC) and A_xx for a named DGP, keeping everything else.
DgpConfig configure_dgp(DgpConfig base, DgpId id);

struct SimulatedPath {
  TimeSeriesFrame frame;
  Eigen::VectorXd nu;      // conditional innovations v_t for the kept rows
  Eigen::MatrixXd eps;     // e_t for the kept rows, T x (K+1)
};

/// Simulates config.T rows after discarding config.burn_in. Levels start at
/// zero and the first p-1 rows of (v, e_x) seed the differences.
SimulatedPath simulate_path(const DgpConfig& config);
TimeSeriesFrame simulate_dgp(const DgpConfig& config, DgpId id);

struct TestSummary {
  TestKind kind = TestKind::Fov;
  int rejections = 0;
  int completed = 0;
  double rejection_rate = 0.0;
  double mean_observed = 0.0;
  double dist_mean = 0.0;
  double dist_q05 = 0.0;
  double dist_q50 = 0.0;
  double dist_q95 = 0.0;
};

struct MonteCarloConfig {
  DgpId dgp = DgpId::H1;
  DeterministicCase det_case = DeterministicCase::III;
  Conditioning conditioning = Conditioning::Conditional;
  int repetitions = 200;
  DgpConfig base = reference_config();
  BootstrapConfig boot;
  /// Fitted lag structure; defaults to the true order of the design.
  std::optional<ArdlSpec> spec;
};

struct MonteCarloResult {
  DgpId dgp = DgpId::H1;
  DeterministicCase det_case = DeterministicCase::III;
  Conditioning conditioning = Conditioning::Conditional;
  int repetitions = 0;
  int completed = 0;
  int failures = 0;
  int T = 0;
  int replicates = 0;
  double alpha = 0.0;
  std::vector<TestSummary> tests;

  const TestSummary* find(TestKind kind) const;
};

/// R independent simulate -> bootstrap cycles. Repetition r draws its data
/// and bootstrap seeds from (base.seed, r); failed repetitions are counted
/// and skipped.
MonteCarloResult monte_carlo(const MonteCarloConfig& config);

}  // namespace ardlboot
