#pragma once

// Conditional and unconditional ARDL error-correction equations for the
// restricted-intercept (case II) and unrestricted-intercept (case III)
// deterministic specifications:
//
//   dy_t = c - a_yy y_{t-1} - a~' x_{t-1} + sum_j g_j' dz_{t-j} [+ w' dx_t] + v_t
//
// Level coefficients are reported with the sign convention above, so a_yy is
// the negated regression coefficient on y_{t-1}.

#include "ardlboot/frame.hpp"
#include "ardlboot/regression.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ardlboot {

enum class DeterministicCase { II, III };
enum class Conditioning { Conditional, Unconditional };
enum class Restriction { None, DropLevels, DropYLevel, DropXLevels };
enum class TestKind { Fov, T, Find };
enum class InformationCriterion { AIC, BIC };

std::string_view to_string(DeterministicCase c);
std::string_view to_string(Conditioning c);
std::optional<DeterministicCase> case_from_string(std::string_view name);
std::optional<Conditioning> conditioning_from_string(std::string_view name);

/// Lag orders follow the levels-ARDL convention. p_y >= 1 gives the lagged
/// differences dy_{t-1}..dy_{t-p_y+1}. For regressor i the differences run
/// over j = 0..p_x[i]-1 in the conditional model (j = 0 is the contemporaneous
/// dx_t) and over j = 1..p_x[i]-1 in the unconditional one, so p_x[i] = 0 is
/// only admissible when conditioning.
struct ArdlSpec {
  DeterministicCase det_case = DeterministicCase::III;
  Conditioning conditioning = Conditioning::Conditional;
  int p_y = 1;
  std::vector<int> p_x;

  void validate(int num_regressors) const;
  /// Effective sample starts at this frame row: max(p_y, max p_x).
  int max_lag() const;
  int total_lags() const;
  bool operator==(const ArdlSpec&) const = default;
};

/// One regressor of a difference equation, evaluated at time t against a
/// value matrix laid out like the frame.
struct Term {
  enum class Kind { Intercept, Level, Diff };
  Kind kind = Kind::Intercept;
  int column = -1;  // frame column
  int lag = 0;      // Level: z_{t-lag}; Diff: z_{t-lag} - z_{t-lag-1}

  double value(const Eigen::MatrixXd& values, Eigen::Index t) const {
    switch (kind) {
      case Kind::Intercept: return 1.0;
      case Kind::Level: return values(t - lag, column);
      case Kind::Diff: return values(t - lag, column) - values(t - lag - 1, column);
    }
    return 0.0;
  }
  bool operator==(const Term&) const = default;
};

std::string term_name(const Term& term, const std::vector<std::string>& variable_names);

/// Regressors of the ARDL equation in canonical order: intercept, y_{t-1},
/// x_{t-1}, lagged dy, then dx per regressor with ascending lag.
std::vector<Term> ardl_terms(const TimeSeriesFrame& frame, const ArdlSpec& spec,
                             Restriction restriction);

struct ArdlDesign {
  std::vector<Term> terms;
  DesignMatrix design;
  Eigen::VectorXd target;  // dy_t
  Eigen::Index first_row;  // frame row of the first observation
};

/// Builds the design over frame rows [first_row, T). first_row defaults to
/// spec.max_lag(); a later start lets nested fits share a longer window.
ArdlDesign build_ardl_design(const TimeSeriesFrame& frame, const ArdlSpec& spec,
                             Restriction restriction,
                             std::optional<Eigen::Index> first_row = std::nullopt);

struct ArdlFit {
  ArdlSpec spec;
  Restriction restriction = Restriction::None;
  std::vector<Term> terms;
  OlsFit ols;

  double a_yy = 0.0;
  Eigen::VectorXd a_tilde_yx;
  std::optional<double> intercept;
  Eigen::VectorXd gamma_y;                  // dy_{t-j}, j = 1..p_y-1
  std::vector<Eigen::VectorXd> gamma_x;     // per regressor, dx_{t-j}, j >= 1
  Eigen::VectorXd omega;                    // dx_t; empty when unconditional

  Eigen::Index first_row = 0;
  Eigen::Index effective_sample = 0;

  /// Deterministic part of dy_t at row t of `values`.
  double predict(const Eigen::MatrixXd& values, Eigen::Index t) const;
};

struct TestStatistics {
  double f_ov = 0.0;
  double t = 0.0;
  double f_ind = 0.0;

  double get(TestKind kind) const;
  bool operator==(const TestStatistics&) const = default;
};

/// Number of restrictions tested by F_ov: levels plus the intercept in case II.
int fov_restrictions(const ArdlSpec& spec, int num_regressors);

ArdlFit fit_ardl(const TimeSeriesFrame& frame, const ArdlSpec& spec, Restriction restriction,
                 std::optional<Eigen::Index> first_row = std::nullopt);

std::pair<ArdlFit, TestStatistics> estimate_ardl(const TimeSeriesFrame& frame,
                                                 const ArdlSpec& spec);

/// One statistic only; fits just the regressions it needs.
double compute_statistic(const TimeSeriesFrame& frame, const ArdlSpec& spec, TestKind kind);

struct LongRun {
  Eigen::VectorXd theta;
  std::optional<double> delta0;
};

LongRun long_run_coefficients(const ArdlFit& fit);

struct LagCandidate {
  ArdlSpec spec;
  double score = 0.0;
};

/// True when `a` is preferred to `b`: lower score, then fewer total lags,
/// then lexicographically smaller (p_y, p_x...).
bool precedes(const LagCandidate& a, const LagCandidate& b);

double information_criterion(const OlsFit& fit, InformationCriterion criterion);

/// Exhaustive grid search; every candidate is scored on the sample implied
/// by p_max.
ArdlSpec select_lags(const TimeSeriesFrame& frame, const ArdlSpec& spec_template, int p_max,
                     InformationCriterion criterion);

}  // namespace ardlboot
