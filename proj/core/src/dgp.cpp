#include "ardlboot/dgp.hpp"

#include "ardlboot/error.hpp"
#include "ardlboot/rng.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace ardlboot {

namespace {

constexpr std::array<std::pair<DgpId, std::string_view>, 10> kDgpNames{{
    {DgpId::H1, "1H"}, {DgpId::L1, "1L"}, {DgpId::A2, "2A"}, {DgpId::B2, "2B"},
    {DgpId::A3, "3A"}, {DgpId::B3, "3B"}, {DgpId::A4, "4A"}, {DgpId::B4, "4B"},
    {DgpId::D5, "5"},  {DgpId::D6, "6"},
}};

}  // namespace

std::string_view to_string(DgpId id) {
  for (const auto& [d, name] : kDgpNames) {
    if (d == id) return name;
  }
  return "?";
}

std::optional<DgpId> dgp_from_string(std::string_view name) {
  for (const auto& [d, n] : kDgpNames) {
    if (n == name) return d;
  }
  return std::nullopt;
}

std::vector<DgpId> all_dgps() {
  std::vector<DgpId> out;
  for (const auto& entry : kDgpNames) out.push_back(entry.first);
  return out;
}

void DgpConfig::validate() const {
  const int k = num_regressors();
  if (k < 1 || A_xx.cols() != k) throw Error(Errc::DimensionMismatch, "A_xx must be square");
  if (sigma.rows() != k + 1 || sigma.cols() != k + 1) {
    throw Error(Errc::DimensionMismatch, "Sigma must be (K+1) x (K+1)");
  }
  if (!sigma.isApprox(sigma.transpose(), 1e-12)) {
    throw Error(Errc::InvalidArgument, "Sigma must be symmetric");
  }
  if (Eigen::LLT<Eigen::MatrixXd>(sigma).info() != Eigen::Success) {
    throw Error(Errc::InvalidArgument, "Sigma must be positive definite");
  }
  for (const auto& g : gamma) {
    if (g.rows() != k + 1 || g.cols() != k + 1) {
      throw Error(Errc::DimensionMismatch, "short-run blocks must be (K+1) x (K+1)");
    }
  }
  if (a_yx_uc.size() != k || mu.size() != k + 1) {
    throw Error(Errc::DimensionMismatch, "a_yx and mu must match the number of regressors");
  }
  if (T < 1) throw Error(Errc::InvalidArgument, "T must be positive");
  if (burn_in < static_cast<int>(gamma.size())) {
    throw Error(Errc::InvalidArgument, "burn-in must cover the p-1 starting rows");
  }
}

Eigen::MatrixXd axx_cointegrated() {
  Eigen::Vector2d loading(0.0, 0.7);
  Eigen::Vector2d beta(1.1, 1.1);
  return loading * beta.transpose();
}

Eigen::MatrixXd axx_stationary() {
  Eigen::MatrixXd a(2, 2);
  a << 0.3, -0.4,
       0.5, 0.3;
  return a;
}

DgpConfig reference_config() {
  DgpConfig c;
  c.sigma.resize(3, 3);
  c.sigma << 1.69, 0.39, 0.52,
             0.39, 1.44, -0.3,
             0.52, -0.3, 1.0;
  Eigen::MatrixXd g1(3, 3), g2(3, 3);
  g1 << 0.6, 0.0, 0.2,
        0.1, -0.3, 0.0,
        0.0, -0.3, 0.2;
  g2 << 0.2, 0.0, 0.1,
        0.05, -0.15, 0.0,
        0.0, 0.0, 0.1;
  c.gamma = {g1, g2};
  c.A_xx = axx_cointegrated();
  c.a_yy = 0.7;
  c.a_yx_uc = Eigen::Vector2d(0.6, 0.4);
  c.mu = Eigen::Vector3d(0.2, 0.3, 0.4);
  return c;
}

ConditionalParams derive_conditional_params(const DgpConfig& config) {
  const int k = config.num_regressors();
  if (config.sigma.rows() != k + 1 || config.sigma.cols() != k + 1) {
    throw Error(Errc::DimensionMismatch, "Sigma must be (K+1) x (K+1)");
  }
  const Eigen::MatrixXd sxx = config.sigma.bottomRightCorner(k, k);
  const Eigen::VectorXd sxy = config.sigma.bottomLeftCorner(k, 1);

  Eigen::FullPivLU<Eigen::MatrixXd> lu(sxx);
  if (!lu.isInvertible()) throw Error(Errc::SingularSigmaXX, "Sigma_xx is singular");
  config.validate();

  ConditionalParams cp;
  cp.omega = lu.solve(sxy);
  cp.sigma_y_x = config.sigma(0, 0) - cp.omega.dot(sxy);
  for (const auto& g : config.gamma) {
    const Eigen::VectorXd gy = g.row(0).transpose();
    const Eigen::MatrixXd gx = g.bottomRows(k);
    cp.gamma_yx.push_back(gy - gx.transpose() * cp.omega);
  }
  cp.a_c_yx = config.A_xx.transpose() * cp.omega;
  cp.a_tilde_yx = config.a_yx_uc - cp.a_c_yx;

  cp.A_tilde = Eigen::MatrixXd::Zero(k + 1, k + 1);
  cp.A_tilde(0, 0) = config.a_yy;
  cp.A_tilde.block(0, 1, 1, k) = cp.a_tilde_yx.transpose();
  cp.A_tilde.bottomRightCorner(k, k) = config.A_xx;
  cp.alpha0_c = cp.A_tilde * config.mu;
  cp.alpha0_y = config.det_case == DeterministicCase::II ? cp.alpha0_c(0)
                                                         : config.alpha0y_unrestricted;
  return cp;
}

DgpConfig configure_dgp(DgpConfig base, DgpId id) {
  const bool stationary_x = id == DgpId::B2 || id == DgpId::B3 || id == DgpId::B4;
  base.A_xx = stationary_x ? axx_stationary() : axx_cointegrated();
  const int k = base.num_regressors();
  const Eigen::VectorXd a_uc = Eigen::Vector2d(0.6, 0.4);

  // a_yx(UC) = w' A_xx makes a~ vanish.
  auto conditioning_term = [&] {
    DgpConfig probe = base;
    probe.a_yx_uc = Eigen::VectorXd::Zero(k);
    return derive_conditional_params(probe).a_c_yx;
  };

  switch (id) {
    case DgpId::H1:
      base.a_yy = 0.7;
      base.a_yx_uc = a_uc;
      break;
    case DgpId::L1:
      base.a_yy = 0.35;
      base.a_yx_uc = a_uc / 2.0;
      break;
    case DgpId::A2:
    case DgpId::B2:
      base.a_yy = 0.0;
      base.a_yx_uc = a_uc;
      break;
    case DgpId::A3:
    case DgpId::B3:
      base.a_yy = 0.0;
      base.a_yx_uc = conditioning_term();
      break;
    case DgpId::A4:
    case DgpId::B4:
      base.a_yy = 0.0;
      base.a_yx_uc = Eigen::VectorXd::Zero(k);
      break;
    case DgpId::D5:
      base.a_yy = 0.7;
      base.a_yx_uc = Eigen::VectorXd::Zero(k);
      break;
    case DgpId::D6:
      base.a_yy = 0.7;
      base.a_yx_uc = conditioning_term();
      break;
  }
  return base;
}

SimulatedPath simulate_path(const DgpConfig& config) {
  const ConditionalParams cp = derive_conditional_params(config);
  const int k = config.num_regressors();
  const int lags = static_cast<int>(config.gamma.size());
  const Eigen::Index total = config.burn_in + config.T;

  const Eigen::MatrixXd chol = Eigen::LLT<Eigen::MatrixXd>(config.sigma).matrixL();
  const Eigen::VectorXd alpha0x = config.A_xx * config.mu.tail(k);

  Engine engine(derive_seed(config.seed, {0x5157ULL}));
  std::normal_distribution<double> normal(0.0, 1.0);

  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(total, k + 1);
  Eigen::MatrixXd dz = Eigen::MatrixXd::Zero(total, k + 1);
  Eigen::MatrixXd eps(total, k + 1);
  Eigen::VectorXd nu(total);

  for (Eigen::Index t = 0; t < total; ++t) {
    Eigen::VectorXd std_draw(k + 1);
    for (int i = 0; i <= k; ++i) std_draw(i) = normal(engine);
    const Eigen::VectorXd e = chol * std_draw;
    eps.row(t) = e.transpose();
    nu(t) = e(0) - cp.omega.dot(e.tail(k));

    const Eigen::VectorXd z_prev =
        t > 0 ? Eigen::VectorXd(z.row(t - 1).transpose()) : Eigen::VectorXd::Zero(k + 1);
    if (t < lags) {
      dz(t, 0) = nu(t);
      dz.row(t).tail(k) = e.tail(k).transpose();
    } else {
      Eigen::VectorXd dx = alpha0x - config.A_xx * z_prev.tail(k) + e.tail(k);
      double dy = cp.alpha0_y - config.a_yy * z_prev(0) - cp.a_tilde_yx.dot(z_prev.tail(k)) + nu(t);
      for (int j = 1; j <= lags; ++j) {
        const Eigen::VectorXd lagged = dz.row(t - j).transpose();
        dx += config.gamma[j - 1].bottomRows(k) * lagged;
        dy += cp.gamma_yx[j - 1].dot(lagged);
      }
      dy += cp.omega.dot(dx);
      dz(t, 0) = dy;
      dz.row(t).tail(k) = dx.transpose();
    }
    z.row(t) = z_prev.transpose() + dz.row(t);
  }

  std::vector<std::string> names{"y"};
  for (int i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
  return SimulatedPath{TimeSeriesFrame(z.bottomRows(config.T), std::move(names), 0),
                       nu.tail(config.T), eps.bottomRows(config.T)};
}

TimeSeriesFrame simulate_dgp(const DgpConfig& config, DgpId id) {
  return simulate_path(configure_dgp(config, id)).frame;
}

const TestSummary* MonteCarloResult::find(TestKind kind) const {
  for (const auto& t : tests) {
    if (t.kind == kind) return &t;
  }
  return nullptr;
}

namespace {

double quantile_sorted(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

MonteCarloResult monte_carlo(const MonteCarloConfig& config) {
  if (config.repetitions < 1) throw Error(Errc::InvalidArgument, "need at least one repetition");
  config.boot.validate();

  DgpConfig dgp = configure_dgp(config.base, config.dgp);
  dgp.det_case = config.det_case;
  dgp.validate();

  ArdlSpec spec;
  if (config.spec) {
    spec = *config.spec;
  } else {
    const int order = static_cast<int>(dgp.gamma.size()) + 1;
    spec.p_y = order;
    spec.p_x.assign(dgp.num_regressors(), order);
  }
  spec.det_case = config.det_case;
  spec.conditioning = config.conditioning;

  struct RepOutcome {
    bool ok = false;
    BootstrapReport report;
  };
  std::vector<RepOutcome> reps(static_cast<std::size_t>(config.repetitions));

  parallel_for(config.repetitions, config.boot.threads, [&](int r) {
    DgpConfig rep_dgp = dgp;
    rep_dgp.seed = derive_seed(config.base.seed, {0xD6ULL, static_cast<std::uint64_t>(r)});
    BootstrapConfig boot = config.boot;
    boot.seed = derive_seed(config.base.seed, {0xB0ULL, static_cast<std::uint64_t>(r)});
    boot.threads = 1;
    try {
      const TimeSeriesFrame frame = simulate_path(rep_dgp).frame;
      reps[static_cast<std::size_t>(r)].report = bootstrap_tests(frame, spec, boot);
      reps[static_cast<std::size_t>(r)].ok = true;
    } catch (const Error&) {
      // counted below as a failed repetition
    }
  });

  MonteCarloResult result;
  result.dgp = config.dgp;
  result.det_case = config.det_case;
  result.conditioning = config.conditioning;
  result.repetitions = config.repetitions;
  result.T = dgp.T;
  result.replicates = config.boot.replicates;
  result.alpha = config.boot.alpha;

  for (TestKind kind : config.boot.tests) {
    TestSummary s;
    s.kind = kind;
    for (const auto& rep : reps) {
      if (!rep.ok) continue;
      const TestResult* tr = rep.report.find(kind);
      ++s.completed;
      s.rejections += tr->reject ? 1 : 0;
      s.mean_observed += tr->observed;
      double mean = 0.0;
      for (double v : tr->distribution) mean += v;
      s.dist_mean += mean / static_cast<double>(tr->distribution.size());
      s.dist_q05 += quantile_sorted(tr->distribution, 0.05);
      s.dist_q50 += quantile_sorted(tr->distribution, 0.50);
      s.dist_q95 += quantile_sorted(tr->distribution, 0.95);
    }
    if (s.completed > 0) {
      const double c = s.completed;
      s.rejection_rate = s.rejections / c;
      s.mean_observed /= c;
      s.dist_mean /= c;
      s.dist_q05 /= c;
      s.dist_q50 /= c;
      s.dist_q95 /= c;
    }
    result.tests.push_back(s);
  }
  for (const auto& rep : reps) {
    if (rep.ok) ++result.completed;
    else ++result.failures;
  }
  return result;
}

}  // namespace ardlboot
