#pragma once

// Dense least squares and the classical F / t statistics every model fit in
// this library is built on.

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace ardlboot {

/// Named regressor block. Columns share one length n >= 1, names are unique
/// and every entry is finite; the constructor enforces all three.
class DesignMatrix {
 public:
  DesignMatrix(Eigen::MatrixXd columns, std::vector<std::string> names);

  const Eigen::MatrixXd& matrix() const noexcept { return columns_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  Eigen::Index rows() const noexcept { return columns_.rows(); }
  Eigen::Index cols() const noexcept { return columns_.cols(); }

  bool has_intercept() const;
  /// Position of a named column, or -1.
  Eigen::Index index_of(const std::string& name) const;
  /// Copy with the named columns removed; unknown names are ignored.
  DesignMatrix without(const std::vector<std::string>& drop) const;

 private:
  Eigen::MatrixXd columns_;
  std::vector<std::string> names_;
};

struct OlsFit {
  Eigen::VectorXd coefficients;
  Eigen::VectorXd residuals;
  Eigen::VectorXd standard_errors;
  std::vector<std::string> names;
  double rss = 0.0;
  double sigma2 = 0.0;
  int dof = 0;

  Eigen::Index nobs() const noexcept { return residuals.size(); }
  Eigen::Index ncoef() const noexcept { return coefficients.size(); }
};

/// Reciprocal condition estimate below which a design is rejected.
inline constexpr double kRankTolerance = 1e-10;

/// Least squares via Householder QR on the column-equilibrated design.
/// Throws RankDeficient when the reciprocal condition number of the
/// equilibrated design falls below kRankTolerance.
OlsFit ols_fit(const DesignMatrix& design, const Eigen::VectorXd& y);

/// ((RSS_r - RSS_u) / q) / (RSS_u / dof_u), clamped at zero.
double f_statistic(const OlsFit& unrestricted, const OlsFit& restricted, int q);

double t_statistic(const OlsFit& fit, Eigen::Index column);

}  // namespace ardlboot
