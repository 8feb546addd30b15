#pragma once

// Residual bootstrap for the F_ov, t and F_ind cointegration tests.
//
// For each test the ARDL equation is re-estimated under that test's null, the
// restricted residuals are paired with the marginal VECM residuals, resampled
// jointly with replacement and recentred, and (y*, x*) are rebuilt recursively
// from a randomly chosen block of p original rows. The unrestricted ARDL is
// then refitted on every bootstrap sample.
//
// Critical values use the order-statistic reading of the counting rule:
//   upper: min{c : #{T*_b > c} <= floor(alpha B)}
//   lower: max{c : #{T*_b < c} <= floor(alpha B)}
// and p-values are (1 + #{T*_b at least as extreme}) / (B + 1).

#include "ardlboot/ardl.hpp"
#include "ardlboot/frame.hpp"
#include "ardlboot/vecm.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ardlboot {

enum class Tail { Upper, Lower };

/// F tests reject in the upper tail, the t test in the lower tail.
constexpr Tail tail_of(TestKind kind) noexcept {
  return kind == TestKind::T ? Tail::Lower : Tail::Upper;
}
constexpr Restriction null_restriction(TestKind kind) noexcept {
  switch (kind) {
    case TestKind::Fov: return Restriction::DropLevels;
    case TestKind::T: return Restriction::DropYLevel;
    case TestKind::Find: return Restriction::DropXLevels;
  }
  return Restriction::None;
}
std::string_view to_string(TestKind kind);
std::optional<TestKind> test_kind_from_string(std::string_view name);

struct BootstrapConfig {
  int replicates = 1999;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  std::vector<TestKind> tests{TestKind::Fov, TestKind::T, TestKind::Find};
  /// Worker cap; 0 uses the hardware concurrency. Results do not depend on it.
  int threads = 0;
  /// Marginal VECM lag order; defaults to the ARDL maximum lag.
  std::optional<int> vecm_lag;
  bool vecm_include_y_level = false;

  void validate() const;
};

struct TestResult {
  TestKind kind = TestKind::Fov;
  double observed = 0.0;
  std::vector<double> distribution;  // sorted ascending, length B
  double critical_value = 0.0;
  double p_value = 1.0;
  bool reject = false;
  int discards = 0;
};

struct BootstrapReport {
  TestStatistics observed;
  std::vector<TestResult> results;
  int replicates = 0;
  double alpha = 0.0;
  std::uint64_t seed = 0;

  const TestResult* find(TestKind kind) const;
};

struct RestrictedResiduals {
  Eigen::VectorXd residuals;
  ArdlFit fit;
};

/// Residuals of the ARDL regression with the null's columns removed.
RestrictedResiduals restricted_residuals(const TimeSeriesFrame& frame, const ArdlSpec& spec,
                                         TestKind null,
                                         std::optional<Eigen::Index> first_row = std::nullopt);

/// Subtracts each column's mean.
Eigen::MatrixXd recenter(Eigen::MatrixXd draws);

/// Absolute level above which a regenerated path counts as explosive.
inline constexpr double kExplosiveBound = 1e12;

/// Rebuilds a T-row frame: the p rows of `initial_block` followed by
/// T - p rows generated from the VECM recursion (x*) and then the restricted
/// ARDL recursion (y*). Throws NonFinitePropagation on explosive paths.
TimeSeriesFrame regenerate_sample(const ArdlFit& restricted, const VecmFit& vecm,
                                  const Eigen::VectorXd& nu_draws,
                                  const Eigen::MatrixXd& eps_draws,
                                  const TimeSeriesFrame& initial_block);

BootstrapReport bootstrap_tests(const TimeSeriesFrame& frame, const ArdlSpec& spec,
                                const BootstrapConfig& config);

double critical_value(std::span<const double> dist, double alpha, Tail tail);
double p_value(std::span<const double> dist, double observed, Tail tail);
/// Applies the rejection rule against the bootstrap critical value.
bool rejects(double observed, double critical, Tail tail) noexcept;

enum class Outcome {
  NoCoint,
  Coint,                  // DGP 1
  D1_DGP2,                // first-type degeneracy
  DoubleDegenerate_DGP3,  // both degeneracies
  D1_DGP4,                // first-type degeneracy
  Stationary_DGP5,        // y stationary
  D2_DGP6,                // second-type degeneracy
};

std::string_view to_string(Outcome outcome);
std::optional<Outcome> outcome_from_string(std::string_view name);

/// Decision tree over the conditional (C) and unconditional (UC) test
/// decisions; `true` means the null was rejected.
Outcome classify_outcome(bool fov_c_reject, bool fov_uc_reject, bool t_reject,
                         bool find_c_reject, bool find_uc_reject);

/// Runs fn(i) for i in [0, n) on up to `threads` workers. The first
/// exception (by index) is rethrown after all workers finish.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace ardlboot
