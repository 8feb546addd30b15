#include "ardlboot/ardl.hpp"

#include "ardlboot/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ardlboot {

std::string_view to_string(DeterministicCase c) { return c == DeterministicCase::II ? "II" : "III"; }

std::string_view to_string(Conditioning c) {
  return c == Conditioning::Conditional ? "conditional" : "unconditional";
}

std::optional<DeterministicCase> case_from_string(std::string_view name) {
  if (name == "II" || name == "2") return DeterministicCase::II;
  if (name == "III" || name == "3") return DeterministicCase::III;
  return std::nullopt;
}

std::optional<Conditioning> conditioning_from_string(std::string_view name) {
  if (name == "conditional" || name == "C") return Conditioning::Conditional;
  if (name == "unconditional" || name == "UC") return Conditioning::Unconditional;
  return std::nullopt;
}

void ArdlSpec::validate(int num_regressors) const {
  if (p_y < 1) throw Error(Errc::InvalidArgument, "p_y must be >= 1");
  if (static_cast<int>(p_x.size()) != num_regressors) {
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(num_regressors) +
                                           " regressor lag orders, got " +
                                           std::to_string(p_x.size()));
  }
  const int lo = conditioning == Conditioning::Conditional ? 0 : 1;
  for (int q : p_x) {
    if (q < lo) {
      throw Error(Errc::InvalidArgument,
                  "regressor lag order " + std::to_string(q) + " below minimum " +
                      std::to_string(lo));
    }
  }
}

int ArdlSpec::max_lag() const {
  int m = std::max(p_y, 1);
  for (int q : p_x) m = std::max(m, q);
  return m;
}

int ArdlSpec::total_lags() const { return std::accumulate(p_x.begin(), p_x.end(), p_y); }

std::string term_name(const Term& term, const std::vector<std::string>& variable_names) {
  switch (term.kind) {
    case Term::Kind::Intercept:
      return "const";
    case Term::Kind::Level:
      return variable_names[term.column] + "(-" + std::to_string(term.lag) + ")";
    case Term::Kind::Diff:
      return "D." + variable_names[term.column] +
             (term.lag == 0 ? std::string() : "(-" + std::to_string(term.lag) + ")");
  }
  return {};
}

std::vector<Term> ardl_terms(const TimeSeriesFrame& frame, const ArdlSpec& spec,
                             Restriction restriction) {
  const int k = frame.num_regressors();
  spec.validate(k);
  const bool drop_y = restriction == Restriction::DropLevels || restriction == Restriction::DropYLevel;
  const bool drop_x = restriction == Restriction::DropLevels || restriction == Restriction::DropXLevels;
  const bool drop_const =
      restriction == Restriction::DropLevels && spec.det_case == DeterministicCase::II;

  std::vector<Term> terms;
  if (!drop_const) terms.push_back({Term::Kind::Intercept, -1, 0});
  if (!drop_y) terms.push_back({Term::Kind::Level, frame.dependent_index(), 1});
  if (!drop_x) {
    for (int i = 0; i < k; ++i) terms.push_back({Term::Kind::Level, frame.regressor_column(i), 1});
  }
  for (int j = 1; j < spec.p_y; ++j) {
    terms.push_back({Term::Kind::Diff, frame.dependent_index(), j});
  }
  const int j0 = spec.conditioning == Conditioning::Conditional ? 0 : 1;
  for (int i = 0; i < k; ++i) {
    for (int j = j0; j < spec.p_x[i]; ++j) {
      terms.push_back({Term::Kind::Diff, frame.regressor_column(i), j});
    }
  }
  return terms;
}

ArdlDesign build_ardl_design(const TimeSeriesFrame& frame, const ArdlSpec& spec,
                             Restriction restriction, std::optional<Eigen::Index> first_row) {
  auto terms = ardl_terms(frame, spec, restriction);
  const Eigen::Index start = first_row.value_or(spec.max_lag());
  if (start < spec.max_lag()) {
    throw Error(Errc::InvalidArgument, "sample start precedes the maximum lag");
  }
  const Eigen::Index T = frame.rows();
  const Eigen::Index n = T - start;
  if (n <= static_cast<Eigen::Index>(terms.size())) {
    throw Error(Errc::SampleTooShort, "T=" + std::to_string(T) + " leaves " + std::to_string(n) +
                                          " observations for " + std::to_string(terms.size()) +
                                          " regressors");
  }

  const Eigen::MatrixXd& z = frame.values();
  const int ycol = frame.dependent_index();
  Eigen::MatrixXd x(n, static_cast<Eigen::Index>(terms.size()));
  Eigen::VectorXd target(n);
  std::vector<std::string> names;
  names.reserve(terms.size());
  for (const auto& term : terms) names.push_back(term_name(term, frame.names()));
  for (Eigen::Index r = 0; r < n; ++r) {
    const Eigen::Index t = start + r;
    target(r) = z(t, ycol) - z(t - 1, ycol);
    for (std::size_t c = 0; c < terms.size(); ++c) {
      x(r, static_cast<Eigen::Index>(c)) = terms[c].value(z, t);
    }
  }
  return ArdlDesign{std::move(terms), DesignMatrix(std::move(x), std::move(names)),
                    std::move(target), start};
}

double ArdlFit::predict(const Eigen::MatrixXd& values, Eigen::Index t) const {
  double s = 0.0;
  for (std::size_t c = 0; c < terms.size(); ++c) {
    s += ols.coefficients(static_cast<Eigen::Index>(c)) * terms[c].value(values, t);
  }
  return s;
}

double TestStatistics::get(TestKind kind) const {
  switch (kind) {
    case TestKind::Fov: return f_ov;
    case TestKind::T: return t;
    case TestKind::Find: return f_ind;
  }
  return 0.0;
}

int fov_restrictions(const ArdlSpec& spec, int num_regressors) {
  return num_regressors + 1 + (spec.det_case == DeterministicCase::II ? 1 : 0);
}

ArdlFit fit_ardl(const TimeSeriesFrame& frame, const ArdlSpec& spec, Restriction restriction,
                 std::optional<Eigen::Index> first_row) {
  ArdlDesign d = build_ardl_design(frame, spec, restriction, first_row);
  ArdlFit fit;
  fit.spec = spec;
  fit.restriction = restriction;
  fit.ols = ols_fit(d.design, d.target);
  if (fit.ols.rss <= 1e-20 * d.target.squaredNorm()) {
    throw Error(Errc::DegenerateFit, "ARDL regression fits the data exactly");
  }
  fit.terms = std::move(d.terms);
  fit.first_row = d.first_row;
  fit.effective_sample = d.target.size();

  const int k = frame.num_regressors();
  fit.a_tilde_yx = Eigen::VectorXd::Zero(k);
  fit.gamma_y = Eigen::VectorXd::Zero(spec.p_y - 1);
  fit.gamma_x.resize(k);
  for (int i = 0; i < k; ++i) fit.gamma_x[i] = Eigen::VectorXd::Zero(std::max(spec.p_x[i] - 1, 0));
  if (spec.conditioning == Conditioning::Conditional) fit.omega = Eigen::VectorXd::Zero(k);

  std::vector<int> regressor_of(frame.values().cols(), -1);
  for (int i = 0; i < k; ++i) regressor_of[frame.regressor_column(i)] = i;

  for (std::size_t c = 0; c < fit.terms.size(); ++c) {
    const Term& term = fit.terms[c];
    const double b = fit.ols.coefficients(static_cast<Eigen::Index>(c));
    const bool is_y = term.column == frame.dependent_index();
    switch (term.kind) {
      case Term::Kind::Intercept:
        fit.intercept = b;
        break;
      case Term::Kind::Level:
        if (is_y) fit.a_yy = -b;
        else fit.a_tilde_yx(regressor_of[term.column]) = -b;
        break;
      case Term::Kind::Diff:
        if (is_y) fit.gamma_y(term.lag - 1) = b;
        else if (term.lag == 0) fit.omega(regressor_of[term.column]) = b;
        else fit.gamma_x[regressor_of[term.column]](term.lag - 1) = b;
        break;
    }
  }
  return fit;
}

namespace {

Eigen::Index y_level_index(const ArdlFit& fit, const TimeSeriesFrame& frame) {
  const Term y_level{Term::Kind::Level, frame.dependent_index(), 1};
  auto it = std::find(fit.terms.begin(), fit.terms.end(), y_level);
  return static_cast<Eigen::Index>(it - fit.terms.begin());
}

}  // namespace

std::pair<ArdlFit, TestStatistics> estimate_ardl(const TimeSeriesFrame& frame,
                                                 const ArdlSpec& spec) {
  const int k = frame.num_regressors();
  ArdlFit full = fit_ardl(frame, spec, Restriction::None);
  const OlsFit levels = fit_ardl(frame, spec, Restriction::DropLevels).ols;
  const OlsFit xlevels = fit_ardl(frame, spec, Restriction::DropXLevels).ols;

  TestStatistics s;
  s.f_ov = f_statistic(full.ols, levels, fov_restrictions(spec, k));
  s.t = t_statistic(full.ols, y_level_index(full, frame));
  s.f_ind = f_statistic(full.ols, xlevels, k);
  return {std::move(full), s};
}

double compute_statistic(const TimeSeriesFrame& frame, const ArdlSpec& spec, TestKind kind) {
  const int k = frame.num_regressors();
  const ArdlFit full = fit_ardl(frame, spec, Restriction::None);
  switch (kind) {
    case TestKind::Fov:
      return f_statistic(full.ols, fit_ardl(frame, spec, Restriction::DropLevels).ols,
                         fov_restrictions(spec, k));
    case TestKind::T:
      return t_statistic(full.ols, y_level_index(full, frame));
    case TestKind::Find:
      return f_statistic(full.ols, fit_ardl(frame, spec, Restriction::DropXLevels).ols, k);
  }
  return 0.0;
}

LongRun long_run_coefficients(const ArdlFit& fit) {
  if (std::abs(fit.a_yy) <= 1e-10) {
    throw Error(Errc::DegenerateAdjustment, "a_yy is zero; long-run coefficients are undefined");
  }
  LongRun lr;
  lr.theta = fit.a_tilde_yx / fit.a_yy;
  if (fit.spec.det_case == DeterministicCase::II && fit.intercept) {
    lr.delta0 = *fit.intercept / fit.a_yy;
  }
  return lr;
}

bool precedes(const LagCandidate& a, const LagCandidate& b) {
  const double tol = 1e-10 * std::max({1.0, std::abs(a.score), std::abs(b.score)});
  if (std::abs(a.score - b.score) > tol) return a.score < b.score;
  const int la = a.spec.total_lags();
  const int lb = b.spec.total_lags();
  if (la != lb) return la < lb;
  if (a.spec.p_y != b.spec.p_y) return a.spec.p_y < b.spec.p_y;
  return std::lexicographical_compare(a.spec.p_x.begin(), a.spec.p_x.end(), b.spec.p_x.begin(),
                                      b.spec.p_x.end());
}

double information_criterion(const OlsFit& fit, InformationCriterion criterion) {
  const double n = static_cast<double>(fit.nobs());
  const double k = static_cast<double>(fit.ncoef());
  const double penalty = criterion == InformationCriterion::AIC ? 2.0 : std::log(n);
  return n * std::log(fit.rss / n) + penalty * k;
}

ArdlSpec select_lags(const TimeSeriesFrame& frame, const ArdlSpec& spec_template, int p_max,
                     InformationCriterion criterion) {
  if (p_max < 1) throw Error(Errc::InvalidArgument, "p_max must be >= 1");
  const int k = frame.num_regressors();
  const int lo = spec_template.conditioning == Conditioning::Conditional ? 0 : 1;

  ArdlSpec cand = spec_template;
  cand.p_y = 1;
  cand.p_x.assign(k, lo);
  const Eigen::Index start = p_max;

  std::optional<LagCandidate> best;
  while (true) {
    const ArdlFit fit = fit_ardl(frame, cand, Restriction::None, start);
    LagCandidate c{cand, information_criterion(fit.ols, criterion)};
    if (!best || precedes(c, *best)) best = c;

    // odometer over (p_y, p_x[0], ..., p_x[k-1])
    int pos = k - 1;
    while (pos >= 0 && cand.p_x[pos] == p_max) cand.p_x[pos--] = lo;
    if (pos >= 0) {
      ++cand.p_x[pos];
      continue;
    }
    if (cand.p_y == p_max) break;
    ++cand.p_y;
  }
  return best->spec;
}

}  // namespace ardlboot
