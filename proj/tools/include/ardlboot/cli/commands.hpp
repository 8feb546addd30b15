#pragma once

// Subcommands of the ardlboot tool. Each takes fully parsed options and
// writes its output to a stream, so they can be driven without a process.

#include "ardlboot/ardl.hpp"
#include "ardlboot/adf.hpp"
#include "ardlboot/dgp.hpp"
#include "ardlboot/report.hpp"
#include "ardlboot/thresholds.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ardlboot::cli {

enum class OutputFormat { Json, Csv };

struct TestOptions {
  std::string data;
  std::string dependent;
  std::vector<std::string> columns;
  bool log_transform = false;
  DeterministicCase det_case = DeterministicCase::III;
  Conditioning conditioning = Conditioning::Conditional;
  bool both = false;
  int p_y = 1;
  std::vector<int> p_x;          // one per regressor; a single value is broadcast
  std::optional<int> auto_lags;  // p_max for grid selection
  InformationCriterion ic = InformationCriterion::AIC;
  std::optional<int> vecm_lag;
  bool vecm_y_level = false;
  int replicates = 1999;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string thresholds_file;
  ThresholdSet threshold_set = ThresholdSet::Asymptotic;
  bool timestamp = true;
  OutputFormat format = OutputFormat::Json;
  std::string dist_out;  // CSV of bootstrap distributions
};

AnalysisReport cmd_test(const TestOptions& opt);
void write_report_csv(std::ostream& out, const AnalysisReport& report);

struct SimulateOptions {
  DgpId dgp = DgpId::H1;
  DeterministicCase det_case = DeterministicCase::III;
  int T = 200;
  int burn_in = 50;
  std::uint64_t seed = 0;
};

void cmd_simulate(const SimulateOptions& opt, std::ostream& out);

struct McOptions {
  std::vector<DgpId> dgps{DgpId::H1};
  DeterministicCase det_case = DeterministicCase::III;
  std::vector<Conditioning> specs{Conditioning::Conditional};
  int repetitions = 200;
  int replicates = 200;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  int T = 200;
  int threads = 0;
};

std::vector<MonteCarloResult> cmd_mc(const McOptions& opt);
void write_mc_csv(std::ostream& out, const std::vector<MonteCarloResult>& results);

struct AdfOptions {
  std::string data;
  std::vector<std::string> columns;
  bool log_transform = false;
  std::vector<int> lags{0};
  AdfDeterministic det = AdfDeterministic::Drift;
  std::optional<AdfCriticalValues> critical_values;
};

void cmd_adf(const AdfOptions& opt, std::ostream& out);

/// Parses argv-style arguments (without the program name), dispatches and
/// returns the process exit code: 0 ok, 2 input, 3 estimation, 4 bootstrap.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ardlboot::cli
