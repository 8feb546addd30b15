#include "ardlboot/adf.hpp"

#include "ardlboot/error.hpp"
#include "ardlboot/regression.hpp"

#include <string>
#include <vector>

namespace ardlboot {

std::string_view to_string(AdfDeterministic det) {
  switch (det) {
    case AdfDeterministic::None: return "none";
    case AdfDeterministic::Drift: return "drift";
    case AdfDeterministic::DriftTrend: return "trend";
  }
  return "?";
}

std::optional<AdfDeterministic> adf_deterministic_from_string(std::string_view name) {
  if (name == "none") return AdfDeterministic::None;
  if (name == "drift") return AdfDeterministic::Drift;
  if (name == "trend") return AdfDeterministic::DriftTrend;
  return std::nullopt;
}

AdfResult adf_test(const Eigen::VectorXd& series, int lags, AdfDeterministic det) {
  if (lags < 0) throw Error(Errc::InvalidArgument, "lags must be >= 0");
  if (!series.allFinite()) throw Error(Errc::NonFiniteInput, "series has non-finite values");
  const int det_terms = det == AdfDeterministic::None ? 0 : det == AdfDeterministic::Drift ? 1 : 2;
  const Eigen::Index T = series.size();
  if (T <= lags + 3 + det_terms) {
    throw Error(Errc::SampleTooShort, "series too short for " + std::to_string(lags) + " lags");
  }

  const Eigen::Index n = T - lags - 1;
  const int k = det_terms + 1 + lags;
  Eigen::MatrixXd X(n, k);
  Eigen::VectorXd dy(n);
  std::vector<std::string> names;
  if (det_terms >= 1) names.emplace_back("const");
  if (det_terms == 2) names.emplace_back("trend");
  names.emplace_back("y(-1)");
  for (int j = 1; j <= lags; ++j) names.push_back("D.y(-" + std::to_string(j) + ")");

  for (Eigen::Index r = 0; r < n; ++r) {
    const Eigen::Index t = r + lags + 1;
    int c = 0;
    if (det_terms >= 1) X(r, c++) = 1.0;
    if (det_terms == 2) X(r, c++) = static_cast<double>(t);
    X(r, c++) = series(t - 1);
    for (int j = 1; j <= lags; ++j) X(r, c++) = series(t - j) - series(t - j - 1);
    dy(r) = series(t) - series(t - 1);
  }

  const OlsFit fit = ols_fit(DesignMatrix(std::move(X), std::move(names)), dy);
  if (!(fit.rss > 0.0)) throw Error(Errc::DegenerateFit, "differenced series fitted exactly");
  AdfResult out;
  out.statistic = t_statistic(fit, det_terms);
  out.lags = lags;
  out.deterministic = det;
  out.n_effective = static_cast<int>(n);
  return out;
}

AdfCriticalValues default_adf_critical_values(AdfDeterministic det) {
  switch (det) {
    case AdfDeterministic::None: return {-2.58, -1.95, -1.62};
    case AdfDeterministic::Drift: return {-3.43, -2.86, -2.57};
    case AdfDeterministic::DriftTrend: return {-3.96, -3.41, -3.12};
  }
  return {};
}

}  // namespace ardlboot
