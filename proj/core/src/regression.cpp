#include "ardlboot/regression.hpp"

#include "ardlboot/error.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace ardlboot {

DesignMatrix::DesignMatrix(Eigen::MatrixXd columns, std::vector<std::string> names)
    : columns_(std::move(columns)), names_(std::move(names)) {
  if (columns_.rows() < 1) {
    throw Error(Errc::DimensionMismatch, "design needs at least one row");
  }
  if (static_cast<Eigen::Index>(names_.size()) != columns_.cols()) {
    throw Error(Errc::DimensionMismatch, "design has " + std::to_string(columns_.cols()) +
                                             " columns but " + std::to_string(names_.size()) +
                                             " names");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) {
      throw Error(Errc::InvalidArgument, "duplicate design column '" + n + "'");
    }
  }
  if (!columns_.allFinite()) {
    throw Error(Errc::NonFiniteInput, "design contains non-finite values");
  }
}

bool DesignMatrix::has_intercept() const { return index_of("const") >= 0; }

Eigen::Index DesignMatrix::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<Eigen::Index>(it - names_.begin());
}

DesignMatrix DesignMatrix::without(const std::vector<std::string>& drop) const {
  std::vector<Eigen::Index> keep;
  std::vector<std::string> kept_names;
  for (Eigen::Index j = 0; j < cols(); ++j) {
    if (std::find(drop.begin(), drop.end(), names_[j]) == drop.end()) {
      keep.push_back(j);
      kept_names.push_back(names_[j]);
    }
  }
  Eigen::MatrixXd out(rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) out.col(j) = columns_.col(keep[j]);
  return DesignMatrix(std::move(out), std::move(kept_names));
}

OlsFit ols_fit(const DesignMatrix& design, const Eigen::VectorXd& y) {
  const Eigen::Index n = design.rows();
  const Eigen::Index k = design.cols();
  if (y.size() != n) {
    throw Error(Errc::DimensionMismatch, "response has " + std::to_string(y.size()) +
                                             " rows, design has " + std::to_string(n));
  }
  if (!y.allFinite()) throw Error(Errc::NonFiniteInput, "response contains non-finite values");
  if (k >= n) {
    throw Error(Errc::SampleTooShort, "need k < n, got k=" + std::to_string(k) +
                                          " n=" + std::to_string(n));
  }

  OlsFit fit;
  fit.names = design.names();
  if (k == 0) {
    // Empty design, e.g. a case II null with no short-run terms.
    fit.residuals = y;
    fit.rss = y.squaredNorm();
    fit.dof = static_cast<int>(n);
    fit.sigma2 = fit.rss / fit.dof;
    return fit;
  }

  // Equilibrate columns so the rank test does not depend on units.
  Eigen::VectorXd scale = design.matrix().colwise().norm().transpose();
  for (Eigen::Index j = 0; j < k; ++j) {
    if (scale(j) == 0.0) {
      throw Error(Errc::RankDeficient, "column '" + design.names()[j] + "' is identically zero");
    }
  }
  const Eigen::MatrixXd scaled = design.matrix() * scale.cwiseInverse().asDiagonal();

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(scaled);
  const Eigen::MatrixXd r = qr.matrixQR().topLeftCorner(k, k).triangularView<Eigen::Upper>();
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(r).singularValues();
  const double rcond = sv(k - 1) / sv(0);
  if (!(rcond >= kRankTolerance)) {
    throw Error(Errc::RankDeficient, "reciprocal condition estimate " + std::to_string(rcond) +
                                         " below tolerance");
  }

  const Eigen::VectorXd qty = qr.householderQ().transpose() * y;
  const Eigen::VectorXd beta_scaled =
      r.triangularView<Eigen::Upper>().solve(qty.head(k));

  fit.coefficients = beta_scaled.cwiseQuotient(scale);
  fit.residuals = y - design.matrix() * fit.coefficients;
  fit.rss = fit.residuals.squaredNorm();
  fit.dof = static_cast<int>(n - k);
  fit.sigma2 = fit.rss / fit.dof;

  // diag((X'X)^-1) from the rows of R^-1, undoing the column scaling.
  const Eigen::MatrixXd r_inv =
      r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
  fit.standard_errors.resize(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    fit.standard_errors(j) = std::sqrt(fit.sigma2 * r_inv.row(j).squaredNorm()) / scale(j);
  }
  return fit;
}

double f_statistic(const OlsFit& unrestricted, const OlsFit& restricted, int q) {
  if (q <= 0) {
    throw Error(Errc::InvalidRestrictionCount, "q must be positive, got " + std::to_string(q));
  }
  if (unrestricted.nobs() != restricted.nobs()) {
    throw Error(Errc::InconsistentSamples, "nested fits use different samples");
  }
  if (restricted.rss < unrestricted.rss - 1e-9 * unrestricted.rss) {
    throw Error(Errc::InconsistentSamples, "restricted RSS below unrestricted RSS");
  }
  // Rounding leaves an exact fit with an RSS near 1e-30 rather than zero.
  if (!(unrestricted.rss > 1e-24 * restricted.rss) || !(unrestricted.rss > 0.0)) {
    throw Error(Errc::DegenerateFit, "unrestricted fit has zero residual sum of squares");
  }
  const double f = ((restricted.rss - unrestricted.rss) / q) / (unrestricted.rss / unrestricted.dof);
  return std::max(f, 0.0);
}

double t_statistic(const OlsFit& fit, Eigen::Index column) {
  if (column < 0 || column >= fit.ncoef()) {
    throw Error(Errc::IndexOutOfRange, "column " + std::to_string(column) + " out of range");
  }
  return fit.coefficients(column) / fit.standard_errors(column);
}

}  // namespace ardlboot
