#pragma once

// Published 5% bound critical values for k = 2 regressors and the
// accept / reject / inconclusive comparison against them.

#include "ardlboot/ardl.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace ardlboot {

/// Asymptotic bounds, or the small-sample set tabulated for T around 30-80.
enum class ThresholdSet { Asymptotic, SmallSample };

std::string_view to_string(ThresholdSet set);
std::optional<ThresholdSet> threshold_set_from_string(std::string_view name);

struct BoundThreshold {
  DeterministicCase det_case = DeterministicCase::III;
  TestKind test = TestKind::Fov;
  int k = 2;
  double alpha = 0.05;
  double i0 = 0.0;
  double i1 = 0.0;
};

class BoundThresholdTable {
 public:
  BoundThresholdTable() = default;
  explicit BoundThresholdTable(std::vector<BoundThreshold> entries);

  static BoundThresholdTable builtin(ThresholdSet set);
  /// Columns case,test,k,alpha,i0,i1.
  static BoundThresholdTable from_csv(std::istream& in);
  static BoundThresholdTable from_file(const std::filesystem::path& path);

  /// Entries of `other` replace matching keys and add new ones.
  void merge(const BoundThresholdTable& other);
  std::optional<BoundThreshold> find(DeterministicCase det_case, TestKind test, int k,
                                     double alpha) const;
  const std::vector<BoundThreshold>& entries() const noexcept { return entries_; }

 private:
  std::vector<BoundThreshold> entries_;
};

enum class BoundVerdict { Reject, Accept, Inconclusive, NotAvailable };

std::string_view to_string(BoundVerdict v);
std::optional<BoundVerdict> bound_verdict_from_string(std::string_view name);

/// Inconclusive iff the statistic lies strictly between I0 and I1. The t-test
/// is lower-tailed, so there I1 < I0.
BoundVerdict bound_verdict(double statistic, double i0, double i1, TestKind test);

}  // namespace ardlboot
