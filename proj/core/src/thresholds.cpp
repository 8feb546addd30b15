#include "ardlboot/thresholds.hpp"

#include "ardlboot/bootstrap.hpp"
#include "ardlboot/csv.hpp"
#include "ardlboot/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace ardlboot {

std::string_view to_string(ThresholdSet set) {
  return set == ThresholdSet::Asymptotic ? "asymptotic" : "small-sample";
}

std::optional<ThresholdSet> threshold_set_from_string(std::string_view name) {
  if (name == "asymptotic") return ThresholdSet::Asymptotic;
  if (name == "small-sample") return ThresholdSet::SmallSample;
  return std::nullopt;
}

namespace {

void check(const BoundThreshold& b) {
  const bool ordered = b.test == TestKind::T ? b.i1 < b.i0 : b.i0 < b.i1;
  if (!ordered) {
    throw Error(Errc::InvalidArgument,
                "bound pair out of order for " + std::string(to_string(b.test)));
  }
  if (b.k < 1 || !(b.alpha > 0.0 && b.alpha < 1.0)) {
    throw Error(Errc::InvalidArgument, "threshold entry needs k >= 1 and alpha in (0, 1)");
  }
}

bool same_key(const BoundThreshold& a, const BoundThreshold& b) {
  return a.det_case == b.det_case && a.test == b.test && a.k == b.k &&
         std::abs(a.alpha - b.alpha) < 1e-12;
}

double number(const std::string& cell, std::size_t row, std::size_t col) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc{} || end != cell.data() + cell.size()) {
    throw CellError(Errc::NonNumericCell, row, col, "non-numeric threshold");
  }
  return v;
}

}  // namespace

BoundThresholdTable::BoundThresholdTable(std::vector<BoundThreshold> entries) {
  for (const auto& e : entries) check(e);
  entries_ = std::move(entries);
}

BoundThresholdTable BoundThresholdTable::builtin(ThresholdSet set) {
  using DC = DeterministicCase;
  using TK = TestKind;
  if (set == ThresholdSet::Asymptotic) {
    return BoundThresholdTable({
        {DC::II, TK::Fov, 2, 0.05, 3.1, 3.87},
        {DC::III, TK::Fov, 2, 0.05, 3.79, 4.85},
        {DC::III, TK::T, 2, 0.05, -2.86, -3.53},
        {DC::III, TK::Find, 2, 0.05, 3.01, 5.42},
    });
  }
  return BoundThresholdTable({
      {DC::II, TK::Fov, 2, 0.05, 3.435, 4.26},
      {DC::III, TK::Fov, 2, 0.05, 4.133, 5.26},
      {DC::III, TK::T, 2, 0.05, -2.86, -3.53},
      {DC::III, TK::Find, 2, 0.05, 3.22, 5.62},
  });
}

BoundThresholdTable BoundThresholdTable::from_csv(std::istream& in) {
  const CsvTable table = parse_csv(in);
  const std::vector<std::string> expected{"case", "test", "k", "alpha", "i0", "i1"};
  std::vector<std::size_t> idx;
  for (const auto& name : expected) {
    std::size_t i = 0;
    while (i < table.header.size() && table.header[i] != name) ++i;
    if (i == table.header.size()) {
      throw Error(Errc::MissingColumn, "threshold file lacks column '" + name + "'");
    }
    idx.push_back(i);
  }

  std::vector<BoundThreshold> entries;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& rec = table.rows[r];
    auto cell = [&](std::size_t j) -> const std::string& {
      if (idx[j] >= rec.size() || rec[idx[j]].empty()) {
        throw CellError(Errc::MissingValue, r + 1, idx[j], "missing threshold field");
      }
      return rec[idx[j]];
    };
    BoundThreshold b;
    const auto det = case_from_string(cell(0));
    if (!det) throw CellError(Errc::InvalidArgument, r + 1, idx[0], "unknown case");
    const auto test = test_kind_from_string(cell(1));
    if (!test) throw CellError(Errc::InvalidArgument, r + 1, idx[1], "unknown test");
    b.det_case = *det;
    b.test = *test;
    b.k = static_cast<int>(number(cell(2), r + 1, idx[2]));
    b.alpha = number(cell(3), r + 1, idx[3]);
    b.i0 = number(cell(4), r + 1, idx[4]);
    b.i1 = number(cell(5), r + 1, idx[5]);
    entries.push_back(b);
  }
  return BoundThresholdTable(std::move(entries));
}

BoundThresholdTable BoundThresholdTable::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  return from_csv(in);
}

void BoundThresholdTable::merge(const BoundThresholdTable& other) {
  for (const auto& e : other.entries_) {
    bool replaced = false;
    for (auto& mine : entries_) {
      if (same_key(mine, e)) {
        mine = e;
        replaced = true;
      }
    }
    if (!replaced) entries_.push_back(e);
  }
}

std::optional<BoundThreshold> BoundThresholdTable::find(DeterministicCase det_case, TestKind test,
                                                        int k, double alpha) const {
  const BoundThreshold key{det_case, test, k, alpha, 0.0, 0.0};
  for (const auto& e : entries_) {
    if (same_key(e, key)) return e;
  }
  return std::nullopt;
}

std::string_view to_string(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::Reject: return "reject";
    case BoundVerdict::Accept: return "accept";
    case BoundVerdict::Inconclusive: return "inconclusive";
    case BoundVerdict::NotAvailable: return "n/a";
  }
  return "?";
}

std::optional<BoundVerdict> bound_verdict_from_string(std::string_view name) {
  for (auto v : {BoundVerdict::Reject, BoundVerdict::Accept, BoundVerdict::Inconclusive,
                 BoundVerdict::NotAvailable}) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

BoundVerdict bound_verdict(double statistic, double i0, double i1, TestKind test) {
  if (!std::isfinite(statistic)) return BoundVerdict::NotAvailable;
  // Flip the t-test onto the upper tail so one comparison serves all three.
  const double sign = test == TestKind::T ? -1.0 : 1.0;
  const double s = sign * statistic;
  const double lo = sign * i0;
  const double hi = sign * i1;
  if (s >= hi) return BoundVerdict::Reject;
  if (s <= lo) return BoundVerdict::Accept;
  return BoundVerdict::Inconclusive;
}

}  // namespace ardlboot
