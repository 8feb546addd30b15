#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ardlboot {

enum class Errc {
  // input
  DimensionMismatch,
  NonFiniteInput,
  InvalidArgument,
  IndexOutOfRange,
  InvalidRestrictionCount,
  InconsistentSamples,
  SampleTooShort,
  MissingColumn,
  NonNumericCell,
  MissingValue,
  NonPositiveForLog,
  Io,
  // estimation
  RankDeficient,
  DegenerateFit,
  DegenerateAdjustment,
  SingularSigmaXX,
  // bootstrap
  NonFinitePropagation,
  TooManyDiscards,
  EmptyDistribution,
};

/// Coarse grouping used for process exit codes.
enum class ErrorFamily { Input, Estimation, Bootstrap };

std::string_view to_string(Errc code);
ErrorFamily family_of(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }
  ErrorFamily family() const noexcept { return family_of(code_); }

 private:
  Errc code_;
};

}  // namespace ardlboot
