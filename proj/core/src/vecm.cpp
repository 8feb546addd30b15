#include "ardlboot/vecm.hpp"

#include "ardlboot/error.hpp"

namespace ardlboot {

std::vector<Term> vecm_terms(const TimeSeriesFrame& frame, int p, bool include_y_level) {
  const int k = frame.num_regressors();
  std::vector<Term> terms;
  terms.push_back({Term::Kind::Intercept, -1, 0});
  if (include_y_level) terms.push_back({Term::Kind::Level, frame.dependent_index(), 1});
  for (int i = 0; i < k; ++i) terms.push_back({Term::Kind::Level, frame.regressor_column(i), 1});
  for (int j = 1; j < p; ++j) {
    for (int v = 0; v <= k; ++v) terms.push_back({Term::Kind::Diff, frame.variable_column(v), j});
  }
  return terms;
}

Eigen::VectorXd VecmFit::predict(const Eigen::MatrixXd& values, Eigen::Index t) const {
  Eigen::VectorXd row(static_cast<Eigen::Index>(terms.size()));
  for (std::size_t c = 0; c < terms.size(); ++c) {
    row(static_cast<Eigen::Index>(c)) = terms[c].value(values, t);
  }
  return coefficients.transpose() * row;
}

VecmFit estimate_vecm_marginal(const TimeSeriesFrame& frame, int p, bool include_y_level,
                               std::optional<Eigen::Index> first_row) {
  if (p < 1) throw Error(Errc::InvalidArgument, "VECM lag order must be >= 1");
  const int k = frame.num_regressors();
  if (k < 1) throw Error(Errc::InvalidArgument, "marginal VECM needs at least one regressor");

  VecmFit fit;
  fit.p = p;
  fit.include_y_level = include_y_level;
  fit.first_row = first_row.value_or(p);
  if (fit.first_row < p) throw Error(Errc::InvalidArgument, "sample start precedes the lag order");
  fit.terms = vecm_terms(frame, p, include_y_level);

  const Eigen::Index n = frame.rows() - fit.first_row;
  const auto m = static_cast<Eigen::Index>(fit.terms.size());
  if (n <= m) {
    throw Error(Errc::SampleTooShort, "marginal VECM has " + std::to_string(n) +
                                          " observations for " + std::to_string(m) +
                                          " regressors");
  }

  const Eigen::MatrixXd& z = frame.values();
  Eigen::MatrixXd x(n, m);
  std::vector<std::string> names;
  for (const auto& term : fit.terms) names.push_back(term_name(term, frame.names()));
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) x(r, c) = fit.terms[c].value(z, fit.first_row + r);
  }
  const DesignMatrix design(std::move(x), std::move(names));

  fit.coefficients.resize(m, k);
  fit.residuals.resize(n, k);
  for (int i = 0; i < k; ++i) {
    const int col = frame.regressor_column(i);
    Eigen::VectorXd target(n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const Eigen::Index t = fit.first_row + r;
      target(r) = z(t, col) - z(t - 1, col);
    }
    OlsFit eq = ols_fit(design, target);
    fit.coefficients.col(i) = eq.coefficients;
    fit.residuals.col(i) = eq.residuals;
    fit.equations.push_back(std::move(eq));
  }

  fit.alpha0x = fit.coefficients.row(0).transpose();
  fit.A_xx = Eigen::MatrixXd::Zero(k, k);
  fit.A_xy = Eigen::VectorXd::Zero(k);
  fit.gamma_x.assign(p - 1, Eigen::MatrixXd::Zero(k, k + 1));
  for (Eigen::Index c = 1; c < m; ++c) {
    const Term& term = fit.terms[c];
    const Eigen::VectorXd b = fit.coefficients.row(c).transpose();
    // Map the frame column back to its variable index (0 = y).
    int v = 0;
    for (int w = 0; w <= k; ++w) {
      if (frame.variable_column(w) == term.column) v = w;
    }
    if (term.kind == Term::Kind::Level) {
      if (v == 0) fit.A_xy = -b;
      else fit.A_xx.col(v - 1) = -b;
    } else {
      fit.gamma_x[term.lag - 1].col(v) = b;
    }
  }
  return fit;
}

}  // namespace ardlboot
