#include "ardlboot/cli/commands.hpp"

#include "ardlboot/error.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace ardlboot::cli {

namespace {

template <typename T, typename Parse>
T parse_or_throw(const std::string& text, Parse parse, const char* what) {
  const auto v = parse(text);
  if (!v) throw Error(Errc::InvalidArgument, std::string("unknown ") + what + " '" + text + "'");
  return *v;
}

std::optional<InformationCriterion> ic_from_string(std::string_view s) {
  if (s == "aic") return InformationCriterion::AIC;
  if (s == "bic") return InformationCriterion::BIC;
  return std::nullopt;
}

std::optional<OutputFormat> format_from_string(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

int exit_code(ErrorFamily family) {
  switch (family) {
    case ErrorFamily::Input: return 2;
    case ErrorFamily::Estimation: return 3;
    case ErrorFamily::Bootstrap: return 4;
  }
  return 1;
}

/// Writes to --out when given, otherwise to the caller's stream.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::Io, "cannot write " + path);
  fn(file);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bootstrap ARDL cointegration tests"};
  app.require_subcommand(1);

  // test
  TestOptions t;
  std::string t_case = "III", t_spec = "conditional", t_ic = "aic", t_set = "asymptotic",
              t_format = "json", t_out;
  bool t_no_timestamp = false;
  auto* test = app.add_subcommand("test", "Bootstrap F_ov, t and F_ind tests on a CSV dataset");
  test->add_option("--data", t.data, "Input CSV")->required();
  test->add_option("--dep", t.dependent, "Dependent variable column")->required();
  test->add_option("--columns", t.columns, "Regressor columns, in order")->delimiter(',');
  test->add_flag("--log", t.log_transform, "Take natural logs");
  test->add_option("--case", t_case, "Deterministic case: II or III");
  test->add_option("--spec", t_spec, "conditional or unconditional");
  test->add_flag("--both", t.both, "Run conditional and unconditional models and classify");
  test->add_option("--py", t.p_y, "Lag order of y (>= 1)");
  test->add_option("--px", t.p_x, "Lag order per regressor")->delimiter(',');
  test->add_option("--auto-lags", t.auto_lags, "Select lags up to this order by --ic");
  test->add_option("--ic", t_ic, "aic or bic");
  test->add_option("--vecm-p", t.vecm_lag, "Lag order of the marginal VECM");
  test->add_flag("--vecm-y-level", t.vecm_y_level, "Include y_{t-1} in the marginal VECM");
  test->add_option("--boot", t.replicates, "Bootstrap replicates");
  test->add_option("--alpha", t.alpha, "Significance level");
  test->add_option("--seed", t.seed, "Master seed");
  test->add_option("--threads", t.threads, "Worker cap (0 = all cores)");
  test->add_option("--thresholds", t.thresholds_file, "Bound threshold override CSV");
  test->add_option("--threshold-set", t_set, "asymptotic or small-sample");
  test->add_flag("--no-timestamp", t_no_timestamp, "Leave the provenance timestamp empty");
  test->add_option("--format", t_format, "json or csv");
  test->add_option("--out", t_out, "Output file (default stdout)");
  test->add_option("--dist-out", t.dist_out, "CSV file for the bootstrap distributions");

  // simulate
  SimulateOptions s;
  std::string s_dgp = "1H", s_case = "III", s_out;
  auto* simulate = app.add_subcommand("simulate", "Simulate one path of a reference DGP");
  simulate->add_option("--dgp", s_dgp, "1H, 1L, 2A, 2B, 3A, 3B, 4A, 4B, 5 or 6");
  simulate->add_option("-T", s.T, "Sample length");
  simulate->add_option("--burn-in", s.burn_in, "Discarded leading rows");
  simulate->add_option("--case", s_case, "II or III");
  simulate->add_option("--seed", s.seed, "Seed");
  simulate->add_option("--out", s_out, "Output file (default stdout)");

  // mc
  McOptions m;
  std::vector<std::string> m_dgps{"1H"};
  std::string m_case = "III", m_spec = "conditional", m_out;
  auto* mc = app.add_subcommand("mc", "Monte Carlo rejection frequencies");
  mc->add_option("--dgp", m_dgps, "DGP ids, or 'all'")->delimiter(',');
  mc->add_option("--case", m_case, "II or III");
  mc->add_option("--spec", m_spec, "conditional, unconditional or both");
  mc->add_option("--reps", m.repetitions, "Monte Carlo repetitions");
  mc->add_option("--boot", m.replicates, "Bootstrap replicates");
  mc->add_option("--alpha", m.alpha, "Significance level");
  mc->add_option("--seed", m.seed, "Master seed");
  mc->add_option("-T", m.T, "Sample length");
  mc->add_option("--threads", m.threads, "Worker cap (0 = all cores)");
  mc->add_option("--out", m_out, "Output file (default stdout)");

  // adf
  AdfOptions a;
  std::string a_det = "drift", a_out;
  std::vector<double> a_cv;
  auto* adf = app.add_subcommand("adf", "Augmented Dickey-Fuller pretest");
  adf->add_option("--data", a.data, "Input CSV")->required();
  adf->add_option("--columns", a.columns, "Columns to test (default all)")->delimiter(',');
  adf->add_flag("--log", a.log_transform, "Take natural logs");
  adf->add_option("--lags", a.lags, "Lag orders")->delimiter(',');
  adf->add_option("--det", a_det, "none, drift or trend");
  adf->add_option("--cv", a_cv, "Critical values at 1%,5%,10%")->delimiter(',')->expected(3);
  adf->add_option("--out", a_out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*test) {
      t.det_case = parse_or_throw<DeterministicCase>(t_case, case_from_string, "case");
      t.conditioning = parse_or_throw<Conditioning>(t_spec, conditioning_from_string, "spec");
      t.ic = parse_or_throw<InformationCriterion>(t_ic, ic_from_string, "criterion");
      t.threshold_set = parse_or_throw<ThresholdSet>(t_set, threshold_set_from_string, "threshold set");
      t.format = parse_or_throw<OutputFormat>(t_format, format_from_string, "format");
      t.timestamp = !t_no_timestamp;
      const AnalysisReport report = cmd_test(t);
      emit(t_out, out, [&](std::ostream& o) {
        if (t.format == OutputFormat::Json) {
          o << to_json(report) << '\n';
        } else {
          write_report_csv(o, report);
        }
      });
    } else if (*simulate) {
      s.dgp = parse_or_throw<DgpId>(s_dgp, dgp_from_string, "DGP");
      s.det_case = parse_or_throw<DeterministicCase>(s_case, case_from_string, "case");
      emit(s_out, out, [&](std::ostream& o) { cmd_simulate(s, o); });
    } else if (*mc) {
      m.dgps.clear();
      for (const auto& d : m_dgps) {
        if (d == "all") {
          const auto every = all_dgps();
          m.dgps.insert(m.dgps.end(), every.begin(), every.end());
        } else {
          m.dgps.push_back(parse_or_throw<DgpId>(d, dgp_from_string, "DGP"));
        }
      }
      m.det_case = parse_or_throw<DeterministicCase>(m_case, case_from_string, "case");
      if (m_spec == "both") {
        m.specs = {Conditioning::Conditional, Conditioning::Unconditional};
      } else {
        m.specs = {parse_or_throw<Conditioning>(m_spec, conditioning_from_string, "spec")};
      }
      const auto results = cmd_mc(m);
      emit(m_out, out, [&](std::ostream& o) { write_mc_csv(o, results); });
    } else if (*adf) {
      a.det = parse_or_throw<AdfDeterministic>(a_det, adf_deterministic_from_string, "det");
      if (!a_cv.empty()) a.critical_values = AdfCriticalValues{a_cv[0], a_cv[1], a_cv[2]};
      emit(a_out, out, [&](std::ostream& o) { cmd_adf(a, o); });
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.family());
  }
  return 0;
}

}  // namespace ardlboot::cli
