#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace ardlboot {

/// T x (K+1) block of observations, one column per variable. The column at
/// dependent_index is y; the remaining columns, in order, are x_1..x_K.
class TimeSeriesFrame {
 public:
  TimeSeriesFrame(Eigen::MatrixXd values, std::vector<std::string> names,
                  int dependent_index = 0);

  const Eigen::MatrixXd& values() const noexcept { return values_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  int dependent_index() const noexcept { return dependent_; }

  Eigen::Index rows() const noexcept { return values_.rows(); }
  /// Number of regressors K.
  int num_regressors() const noexcept { return static_cast<int>(values_.cols()) - 1; }

  /// Frame column holding regressor i (0-based over x_1..x_K).
  int regressor_column(int i) const noexcept { return i < dependent_ ? i : i + 1; }
  /// Column index of "variable v" where v = 0 is y and v = i+1 is x_{i+1}.
  int variable_column(int v) const noexcept { return v == 0 ? dependent_ : regressor_column(v - 1); }
  const std::string& variable_name(int v) const { return names_[variable_column(v)]; }

  /// Rows [first, first + count).
  TimeSeriesFrame slice(Eigen::Index first, Eigen::Index count) const;

 private:
  Eigen::MatrixXd values_;
  std::vector<std::string> names_;
  int dependent_;
};

}  // namespace ardlboot
