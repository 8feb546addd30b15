#include "ardlboot/cli/commands.hpp"

#include "ardlboot/bootstrap.hpp"
#include "ardlboot/csv.hpp"
#include "ardlboot/error.hpp"
#include "ardlboot/rng.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace ardlboot::cli {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<int> broadcast_lags(const std::vector<int>& p_x, int k) {
  if (p_x.empty()) return std::vector<int>(static_cast<std::size_t>(k), 1);
  if (p_x.size() == 1) return std::vector<int>(static_cast<std::size_t>(k), p_x.front());
  if (static_cast<int>(p_x.size()) != k) {
    throw Error(Errc::DimensionMismatch, "--px needs 1 or " + std::to_string(k) + " values");
  }
  return p_x;
}

ArdlSpec make_spec(const TestOptions& opt, const TimeSeriesFrame& frame, Conditioning cond) {
  ArdlSpec spec;
  spec.det_case = opt.det_case;
  spec.conditioning = cond;
  spec.p_y = opt.p_y;
  spec.p_x = broadcast_lags(opt.p_x, frame.num_regressors());
  if (cond == Conditioning::Unconditional) {
    // dx_t is not a regressor here, so a zero order has no meaning.
    for (int& p : spec.p_x) p = std::max(p, 1);
  }
  if (opt.auto_lags) spec = select_lags(frame, spec, *opt.auto_lags, opt.ic);
  spec.validate(frame.num_regressors());
  return spec;
}

}  // namespace

AnalysisReport cmd_test(const TestOptions& opt) {
  const std::string bytes = slurp(opt.data);
  std::istringstream in(bytes);
  const TimeSeriesFrame frame =
      frame_from_table(parse_csv(in), opt.dependent, opt.columns, opt.log_transform);
  const int k = frame.num_regressors();

  BoundThresholdTable thresholds = BoundThresholdTable::builtin(opt.threshold_set);
  if (!opt.thresholds_file.empty()) {
    thresholds.merge(BoundThresholdTable::from_file(opt.thresholds_file));
  }

  std::vector<Conditioning> runs;
  if (opt.both) {
    runs = {Conditioning::Conditional, Conditioning::Unconditional};
  } else {
    runs = {opt.conditioning};
  }

  AnalysisReport report;
  report.dependent = frame.names().front();
  report.regressors.assign(frame.names().begin() + 1, frame.names().end());
  report.T = static_cast<int>(frame.rows());
  report.log_transform = opt.log_transform;
  report.provenance.seed = opt.seed;
  report.provenance.replicates = opt.replicates;
  report.provenance.alpha = opt.alpha;
  report.provenance.timestamp = opt.timestamp ? utc_timestamp() : "";
  report.provenance.input_digest = hex64(fnv1a64(bytes));
  report.provenance.threshold_set = std::string(to_string(opt.threshold_set));

  std::ofstream dist;
  if (!opt.dist_out.empty()) {
    dist.open(opt.dist_out, std::ios::binary);
    if (!dist) throw Error(Errc::Io, "cannot write " + opt.dist_out);
    write_csv_row(dist, {"conditioning", "test", "rank", "value"});
  }

  for (Conditioning cond : runs) {
    const ArdlSpec spec = make_spec(opt, frame, cond);
    BootstrapConfig boot;
    boot.replicates = opt.replicates;
    boot.alpha = opt.alpha;
    boot.seed = opt.seed;
    boot.threads = opt.threads;
    boot.vecm_lag = opt.vecm_lag;
    boot.vecm_include_y_level = opt.vecm_y_level;
    const BootstrapReport br = bootstrap_tests(frame, spec, boot);

    ModelBlock model;
    model.spec = spec;
    model.vecm_lag = opt.vecm_lag.value_or(spec.max_lag());
    model.nobs = report.T - std::max(spec.max_lag(), model.vecm_lag);
    for (const auto& r : br.results) {
      TestBlock t;
      t.kind = r.kind;
      t.observed = r.observed;
      t.critical_value = r.critical_value;
      t.p_value = r.p_value;
      t.reject = r.reject;
      t.discards = r.discards;
      // Bound tables are tabulated for the conditional model only.
      if (cond == Conditioning::Conditional) {
        if (const auto b = thresholds.find(spec.det_case, r.kind, k, opt.alpha)) {
          t.bound_i0 = b->i0;
          t.bound_i1 = b->i1;
          t.bound_verdict = bound_verdict(r.observed, b->i0, b->i1, r.kind);
        }
      }
      model.tests.push_back(t);
      if (dist) {
        for (std::size_t i = 0; i < r.distribution.size(); ++i) {
          write_csv_row(dist, {std::string(to_string(cond)), std::string(to_string(r.kind)),
                               std::to_string(i + 1), format_double(r.distribution[i])});
        }
      }
    }
    report.models.push_back(std::move(model));
  }

  if (opt.both) {
    const ModelBlock* c = report.find(Conditioning::Conditional);
    const ModelBlock* uc = report.find(Conditioning::Unconditional);
    report.outcome = classify_outcome(c->find(TestKind::Fov)->reject, uc->find(TestKind::Fov)->reject,
                                      c->find(TestKind::T)->reject, c->find(TestKind::Find)->reject,
                                      uc->find(TestKind::Find)->reject);
  }
  return report;
}

void write_report_csv(std::ostream& out, const AnalysisReport& report) {
  write_csv_row(out, {"conditioning", "case", "test", "observed", "critical_value", "p_value",
                      "reject", "bound_i0", "bound_i1", "bound_verdict"});
  auto opt_num = [](const std::optional<double>& v) { return v ? format_double(*v) : ""; };
  for (const auto& m : report.models) {
    for (const auto& t : m.tests) {
      write_csv_row(out, {std::string(to_string(m.spec.conditioning)),
                          std::string(to_string(m.spec.det_case)), std::string(to_string(t.kind)),
                          format_double(t.observed), format_double(t.critical_value),
                          format_double(t.p_value), t.reject ? "1" : "0", opt_num(t.bound_i0),
                          opt_num(t.bound_i1), std::string(to_string(t.bound_verdict))});
    }
  }
}

void cmd_simulate(const SimulateOptions& opt, std::ostream& out) {
  DgpConfig config = reference_config();
  config.det_case = opt.det_case;
  config.T = opt.T;
  config.burn_in = opt.burn_in;
  config.seed = opt.seed;
  const TimeSeriesFrame frame = simulate_dgp(config, opt.dgp);
  write_csv(out, frame.names(), frame.values());
}

std::vector<MonteCarloResult> cmd_mc(const McOptions& opt) {
  std::vector<MonteCarloResult> results;
  for (DgpId id : opt.dgps) {
    for (Conditioning cond : opt.specs) {
      MonteCarloConfig mc;
      mc.dgp = id;
      mc.det_case = opt.det_case;
      mc.conditioning = cond;
      mc.repetitions = opt.repetitions;
      mc.base.T = opt.T;
      mc.base.seed = opt.seed;
      mc.boot.replicates = opt.replicates;
      mc.boot.alpha = opt.alpha;
      mc.boot.threads = opt.threads;
      results.push_back(monte_carlo(mc));
    }
  }
  return results;
}

void write_mc_csv(std::ostream& out, const std::vector<MonteCarloResult>& results) {
  write_csv_row(out, {"dgp", "case", "conditioning", "test", "repetitions", "completed",
                      "failures", "T", "replicates", "alpha", "rejections", "rejection_rate",
                      "mean_observed", "dist_mean", "dist_q05", "dist_q50", "dist_q95"});
  for (const auto& r : results) {
    for (const auto& t : r.tests) {
      write_csv_row(out, {std::string(to_string(r.dgp)), std::string(to_string(r.det_case)),
                          std::string(to_string(r.conditioning)), std::string(to_string(t.kind)),
                          std::to_string(r.repetitions), std::to_string(t.completed),
                          std::to_string(r.failures), std::to_string(r.T),
                          std::to_string(r.replicates), format_double(r.alpha),
                          std::to_string(t.rejections), format_double(t.rejection_rate),
                          format_double(t.mean_observed), format_double(t.dist_mean),
                          format_double(t.dist_q05), format_double(t.dist_q50),
                          format_double(t.dist_q95)});
    }
  }
}

void cmd_adf(const AdfOptions& opt, std::ostream& out) {
  const CsvTable table = read_csv(opt.data);
  std::vector<std::string> columns = opt.columns;
  if (columns.empty()) columns = table.header;
  const AdfCriticalValues cv = opt.critical_values.value_or(default_adf_critical_values(opt.det));

  write_csv_row(out, {"column", "deterministic", "lags", "n_effective", "statistic", "cv_1pct",
                      "cv_5pct", "cv_10pct", "reject_5pct"});
  for (const auto& name : columns) {
    const Eigen::VectorXd series = numeric_column(table, name, opt.log_transform);
    for (int lags : opt.lags) {
      const AdfResult r = adf_test(series, lags, opt.det);
      write_csv_row(out, {name, std::string(to_string(opt.det)), std::to_string(r.lags),
                          std::to_string(r.n_effective), format_double(r.statistic),
                          format_double(cv.pct1), format_double(cv.pct5), format_double(cv.pct10),
                          r.statistic < cv.pct5 ? "1" : "0"});
    }
  }
}

}  // namespace ardlboot::cli
