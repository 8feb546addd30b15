#pragma once

// Augmented Dickey-Fuller unit-root pretest.

#include <Eigen/Dense>

#include <optional>
#include <string_view>

namespace ardlboot {

enum class AdfDeterministic { None, Drift, DriftTrend };

std::string_view to_string(AdfDeterministic det);
std::optional<AdfDeterministic> adf_deterministic_from_string(std::string_view name);

struct AdfResult {
  double statistic = 0.0;  // t-ratio on y_{t-1}
  int lags = 0;
  AdfDeterministic deterministic = AdfDeterministic::Drift;
  int n_effective = 0;     // T - lags - 1
};

/// dy_t = [mu] + [beta t] + rho y_{t-1} + sum_{j=1..lags} phi_j dy_{t-j} + e_t
AdfResult adf_test(const Eigen::VectorXd& series, int lags, AdfDeterministic det);

/// Dickey-Fuller critical values for the t-ratio. The defaults are the classic
/// large-sample 1%/5%/10% tabulations; callers may substitute their own.
struct AdfCriticalValues {
  double pct1 = 0.0;
  double pct5 = 0.0;
  double pct10 = 0.0;
};

AdfCriticalValues default_adf_critical_values(AdfDeterministic det);

}  // namespace ardlboot
