#include "ardlboot/frame.hpp"

#include "ardlboot/error.hpp"

#include <unordered_set>

namespace ardlboot {

TimeSeriesFrame::TimeSeriesFrame(Eigen::MatrixXd values, std::vector<std::string> names,
                                 int dependent_index)
    : values_(std::move(values)), names_(std::move(names)), dependent_(dependent_index) {
  if (values_.rows() < 1 || values_.cols() < 1) {
    throw Error(Errc::DimensionMismatch, "frame must have at least one row and one column");
  }
  if (static_cast<Eigen::Index>(names_.size()) != values_.cols()) {
    throw Error(Errc::DimensionMismatch, "frame names do not match column count");
  }
  if (dependent_ < 0 || dependent_ >= values_.cols()) {
    throw Error(Errc::IndexOutOfRange, "dependent index out of range");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw Error(Errc::InvalidArgument, "duplicate variable '" + n + "'");
  }
  if (!values_.allFinite()) throw Error(Errc::NonFiniteInput, "frame contains non-finite values");
}

TimeSeriesFrame TimeSeriesFrame::slice(Eigen::Index first, Eigen::Index count) const {
  if (first < 0 || count < 1 || first + count > rows()) {
    throw Error(Errc::IndexOutOfRange, "slice out of range");
  }
  return TimeSeriesFrame(values_.middleRows(first, count), names_, dependent_);
}

}  // namespace ardlboot
