#include "ardlboot/error.hpp"

namespace ardlboot {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NonFiniteInput: return "NonFiniteInput";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidRestrictionCount: return "InvalidRestrictionCount";
    case Errc::InconsistentSamples: return "InconsistentSamples";
    case Errc::SampleTooShort: return "SampleTooShort";
    case Errc::MissingColumn: return "MissingColumn";
    case Errc::NonNumericCell: return "NonNumericCell";
    case Errc::MissingValue: return "MissingValue";
    case Errc::NonPositiveForLog: return "NonPositiveForLog";
    case Errc::Io: return "Io";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::DegenerateFit: return "DegenerateFit";
    case Errc::DegenerateAdjustment: return "DegenerateAdjustment";
    case Errc::SingularSigmaXX: return "SingularSigmaXX";
    case Errc::NonFinitePropagation: return "NonFinitePropagation";
    case Errc::TooManyDiscards: return "TooManyDiscards";
    case Errc::EmptyDistribution: return "EmptyDistribution";
  }
  return "Unknown";
}

ErrorFamily family_of(Errc code) {
  switch (code) {
    case Errc::RankDeficient:
    case Errc::DegenerateFit:
    case Errc::DegenerateAdjustment:
    case Errc::SingularSigmaXX:
      return ErrorFamily::Estimation;
    case Errc::NonFinitePropagation:
    case Errc::TooManyDiscards:
    case Errc::EmptyDistribution:
      return ErrorFamily::Bootstrap;
    default:
      return ErrorFamily::Input;
  }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace ardlboot
