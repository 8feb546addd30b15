#include "ardlboot/bootstrap.hpp"

#include "ardlboot/error.hpp"
#include "ardlboot/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace ardlboot {

std::string_view to_string(TestKind kind) {
  switch (kind) {
    case TestKind::Fov: return "F_ov";
    case TestKind::T: return "t";
    case TestKind::Find: return "F_ind";
  }
  return "?";
}

std::optional<TestKind> test_kind_from_string(std::string_view name) {
  if (name == "F_ov") return TestKind::Fov;
  if (name == "t") return TestKind::T;
  if (name == "F_ind") return TestKind::Find;
  return std::nullopt;
}

void BootstrapConfig::validate() const {
  if (replicates < 99) {
    throw Error(Errc::InvalidArgument, "need at least 99 bootstrap replicates");
  }
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw Error(Errc::InvalidArgument, "alpha must lie in (0, 0.5)");
  }
  if (tests.empty()) throw Error(Errc::InvalidArgument, "no tests requested");
  if (threads < 0) throw Error(Errc::InvalidArgument, "threads must be >= 0");
  if (vecm_lag && *vecm_lag < 1) throw Error(Errc::InvalidArgument, "VECM lag must be >= 1");
}

const TestResult* BootstrapReport::find(TestKind kind) const {
  for (const auto& r : results) {
    if (r.kind == kind) return &r;
  }
  return nullptr;
}

RestrictedResiduals restricted_residuals(const TimeSeriesFrame& frame, const ArdlSpec& spec,
                                         TestKind null, std::optional<Eigen::Index> first_row) {
  ArdlFit fit = fit_ardl(frame, spec, null_restriction(null), first_row);
  Eigen::VectorXd u = fit.ols.residuals;
  return {std::move(u), std::move(fit)};
}

Eigen::MatrixXd recenter(Eigen::MatrixXd draws) {
  if (draws.rows() == 0) return draws;
  // A second pass removes the rounding left by the first.
  draws.rowwise() -= draws.colwise().mean();
  draws.rowwise() -= draws.colwise().mean();
  return draws;
}

TimeSeriesFrame regenerate_sample(const ArdlFit& restricted, const VecmFit& vecm,
                                  const Eigen::VectorXd& nu_draws,
                                  const Eigen::MatrixXd& eps_draws,
                                  const TimeSeriesFrame& initial_block) {
  const Eigen::Index p = initial_block.rows();
  const Eigen::Index n = nu_draws.size();
  const int k = initial_block.num_regressors();
  if (eps_draws.rows() != n || eps_draws.cols() != k) {
    throw Error(Errc::DimensionMismatch, "innovation draws have inconsistent shapes");
  }
  if (p < restricted.spec.max_lag() || p < vecm.p) {
    throw Error(Errc::InvalidArgument, "initial block shorter than the recursion lag");
  }

  Eigen::MatrixXd z(p + n, initial_block.values().cols());
  z.topRows(p) = initial_block.values();
  const int ycol = initial_block.dependent_index();
  for (Eigen::Index r = 0; r < n; ++r) {
    const Eigen::Index t = p + r;
    const Eigen::VectorXd dx = vecm.predict(z, t) + eps_draws.row(r).transpose();
    for (int i = 0; i < k; ++i) {
      const int c = initial_block.regressor_column(i);
      z(t, c) = z(t - 1, c) + dx(i);
    }
    z(t, ycol) = z(t - 1, ycol) + restricted.predict(z, t) + nu_draws(r);
    for (Eigen::Index c = 0; c < z.cols(); ++c) {
      if (!(std::abs(z(t, c)) <= kExplosiveBound)) {
        throw Error(Errc::NonFinitePropagation, "regenerated path exploded at row " +
                                                    std::to_string(t));
      }
    }
  }
  return TimeSeriesFrame(std::move(z), initial_block.names(), ycol);
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, n);

  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  auto run = [&](int i) {
    try {
      fn(i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  };

  if (workers == 1) {
    for (int i = 0; i < n; ++i) run(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int i = next++; i < n; i = next++) run(i);
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

namespace {

int max_discards(int replicates) { return replicates / 10; }

struct ReplicateOutcome {
  double statistic = 0.0;
  int discards = 0;
};

}  // namespace

BootstrapReport bootstrap_tests(const TimeSeriesFrame& frame, const ArdlSpec& spec,
                                const BootstrapConfig& config) {
  config.validate();
  spec.validate(frame.num_regressors());

  BootstrapReport report;
  report.replicates = config.replicates;
  report.alpha = config.alpha;
  report.seed = config.seed;
  report.observed = estimate_ardl(frame, spec).second;

  const int vecm_p = config.vecm_lag.value_or(spec.max_lag());
  const Eigen::Index p = std::max<Eigen::Index>(spec.max_lag(), vecm_p);
  const Eigen::Index T = frame.rows();
  const VecmFit vecm = estimate_vecm_marginal(frame, vecm_p, config.vecm_include_y_level, p);
  const Eigen::Index n = T - p;
  const int k = frame.num_regressors();
  const int cap = max_discards(config.replicates);

  for (TestKind kind : config.tests) {
    const RestrictedResiduals rr = restricted_residuals(frame, spec, kind, p);
    Eigen::MatrixXd pool(n, k + 1);
    pool.col(0) = rr.residuals;
    pool.rightCols(k) = vecm.residuals;

    std::vector<ReplicateOutcome> outcomes(static_cast<std::size_t>(config.replicates));
    parallel_for(config.replicates, config.threads, [&](int b) {
      ReplicateOutcome& out = outcomes[static_cast<std::size_t>(b)];
      for (int attempt = 0;; ++attempt) {
        Engine engine(derive_seed(config.seed, {static_cast<std::uint64_t>(kind),
                                                static_cast<std::uint64_t>(b),
                                                static_cast<std::uint64_t>(attempt)}));
        std::uniform_int_distribution<Eigen::Index> pick_start(0, T - p);
        std::uniform_int_distribution<Eigen::Index> pick_row(0, n - 1);
        const Eigen::Index start = pick_start(engine);
        Eigen::MatrixXd draws(n, k + 1);
        for (Eigen::Index r = 0; r < n; ++r) draws.row(r) = pool.row(pick_row(engine));
        draws = recenter(std::move(draws));
        try {
          const TimeSeriesFrame sample =
              regenerate_sample(rr.fit, vecm, draws.col(0), draws.rightCols(k),
                                frame.slice(start, p));
          out.statistic = compute_statistic(sample, spec, kind);
          return;
        } catch (const Error& e) {
          if (e.family() == ErrorFamily::Input) throw;
          if (++out.discards > cap) {
            throw Error(Errc::TooManyDiscards, "replicate " + std::to_string(b) +
                                                   " could not be regenerated");
          }
        }
      }
    });

    TestResult result;
    result.kind = kind;
    result.observed = report.observed.get(kind);
    result.distribution.reserve(outcomes.size());
    for (const auto& o : outcomes) {
      result.distribution.push_back(o.statistic);
      result.discards += o.discards;
    }
    if (result.discards > cap) {
      throw Error(Errc::TooManyDiscards, std::to_string(result.discards) + " of " +
                                             std::to_string(config.replicates) +
                                             " replicates discarded for " +
                                             std::string(to_string(kind)));
    }
    std::sort(result.distribution.begin(), result.distribution.end());
    const Tail tail = tail_of(kind);
    result.critical_value = critical_value(result.distribution, config.alpha, tail);
    result.p_value = p_value(result.distribution, result.observed, tail);
    result.reject = rejects(result.observed, result.critical_value, tail);
    report.results.push_back(std::move(result));
  }
  return report;
}

namespace {

void check_distribution(std::span<const double> dist) {
  if (dist.empty()) throw Error(Errc::EmptyDistribution, "bootstrap distribution is empty");
  for (double v : dist) {
    if (!std::isfinite(v)) throw Error(Errc::NonFiniteInput, "distribution has non-finite values");
  }
}

}  // namespace

double critical_value(std::span<const double> dist, double alpha, Tail tail) {
  check_distribution(dist);
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(Errc::InvalidArgument, "alpha must lie in (0, 1)");
  std::vector<double> sorted(dist.begin(), dist.end());
  std::sort(sorted.begin(), sorted.end());
  const auto b = static_cast<std::ptrdiff_t>(sorted.size());
  // floor(alpha * B), guarding against products like 0.05 * 100 landing just below 5.
  const auto m = std::min<std::ptrdiff_t>(
      static_cast<std::ptrdiff_t>(std::floor(alpha * static_cast<double>(b) + 1e-9)), b - 1);
  return tail == Tail::Upper ? sorted[static_cast<std::size_t>(b - 1 - m)]
                             : sorted[static_cast<std::size_t>(m)];
}

double p_value(std::span<const double> dist, double observed, Tail tail) {
  check_distribution(dist);
  std::size_t count = 0;
  for (double v : dist) {
    if (tail == Tail::Upper ? v >= observed : v <= observed) ++count;
  }
  return (1.0 + static_cast<double>(count)) / (static_cast<double>(dist.size()) + 1.0);
}

bool rejects(double observed, double critical, Tail tail) noexcept {
  return tail == Tail::Upper ? observed > critical : observed < critical;
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::NoCoint: return "NoCoint";
    case Outcome::Coint: return "Coint(DGP1)";
    case Outcome::D1_DGP2: return "D1_DGP2";
    case Outcome::DoubleDegenerate_DGP3: return "DoubleDegenerate_DGP3";
    case Outcome::D1_DGP4: return "D1_DGP4";
    case Outcome::Stationary_DGP5: return "Stationary_DGP5";
    case Outcome::D2_DGP6: return "D2_DGP6";
  }
  return "?";
}

std::optional<Outcome> outcome_from_string(std::string_view name) {
  for (Outcome o : {Outcome::NoCoint, Outcome::Coint, Outcome::D1_DGP2,
                    Outcome::DoubleDegenerate_DGP3, Outcome::D1_DGP4, Outcome::Stationary_DGP5,
                    Outcome::D2_DGP6}) {
    if (to_string(o) == name) return o;
  }
  return std::nullopt;
}

Outcome classify_outcome(bool fov_c_reject, bool fov_uc_reject, bool t_reject,
                         bool find_c_reject, bool find_uc_reject) {
  if (!fov_c_reject) return fov_uc_reject ? Outcome::DoubleDegenerate_DGP3 : Outcome::NoCoint;
  if (!t_reject) return find_uc_reject ? Outcome::D1_DGP2 : Outcome::D1_DGP4;
  if (!find_c_reject) return Outcome::D2_DGP6;
  return find_uc_reject ? Outcome::Coint : Outcome::Stationary_DGP5;
}

}  // namespace ardlboot
