#pragma once

// Machine-readable result of one analysis run.

#include "ardlboot/ardl.hpp"
#include "ardlboot/bootstrap.hpp"
#include "ardlboot/thresholds.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ardlboot {

struct TestBlock {
  TestKind kind = TestKind::Fov;
  double observed = 0.0;
  double critical_value = 0.0;
  double p_value = 0.0;
  bool reject = false;
  int discards = 0;
  std::optional<double> bound_i0;
  std::optional<double> bound_i1;
  BoundVerdict bound_verdict = BoundVerdict::NotAvailable;

  bool operator==(const TestBlock&) const = default;
};

struct ModelBlock {
  ArdlSpec spec;
  int vecm_lag = 0;
  int nobs = 0;
  std::vector<TestBlock> tests;

  const TestBlock* find(TestKind kind) const;
  bool operator==(const ModelBlock&) const = default;
};

struct Provenance {
  std::uint64_t seed = 0;
  int replicates = 0;
  double alpha = 0.05;
  std::string timestamp;     // ISO 8601 UTC; empty when suppressed
  std::string input_digest;  // FNV-1a 64, hex
  std::string threshold_set;

  bool operator==(const Provenance&) const = default;
};

struct AnalysisReport {
  std::string dependent;
  std::vector<std::string> regressors;
  int T = 0;
  bool log_transform = false;
  std::vector<ModelBlock> models;
  std::optional<Outcome> outcome;
  Provenance provenance;

  const ModelBlock* find(Conditioning conditioning) const;
  bool operator==(const AnalysisReport&) const = default;
};

std::string to_json(const AnalysisReport& report, int indent = 2);
/// Throws Error(InvalidArgument) on malformed input.
AnalysisReport report_from_json(std::string_view text);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);
std::string utc_timestamp();

}  // namespace ardlboot
