#include "ardlboot/ardl.hpp"
#include "ardlboot/bootstrap.hpp"
#include "ardlboot/dgp.hpp"
#include "ardlboot/regression.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ardlboot;

namespace {

TimeSeriesFrame sample(int T) {
  DgpConfig cfg = reference_config();
  cfg.T = T;
  cfg.seed = 1;
  return simulate_dgp(cfg, DgpId::H1);
}

const ArdlSpec kSpec{DeterministicCase::III, Conditioning::Conditional, 3, {3, 3}};

}  // namespace

static void BM_Ols(benchmark::State& state) {
  const auto n = state.range(0);
  std::mt19937_64 rng(2);
  std::normal_distribution<double> norm;
  Eigen::MatrixXd x(n, 11);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (int j = 0; j < 11; ++j) x(i, j) = norm(rng);
    y(i) = norm(rng);
  }
  std::vector<std::string> names;
  for (int j = 0; j < 11; ++j) names.push_back("c" + std::to_string(j));
  const DesignMatrix d(x, names);
  for (auto _ : state) benchmark::DoNotOptimize(ols_fit(d, y));
}
BENCHMARK(BM_Ols)->Arg(100)->Arg(200)->Arg(1000);

static void BM_EstimateArdl(benchmark::State& state) {
  const TimeSeriesFrame f = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_ardl(f, kSpec));
}
BENCHMARK(BM_EstimateArdl)->Arg(200);

static void BM_Simulate(benchmark::State& state) {
  DgpConfig cfg = configure_dgp(reference_config(), DgpId::H1);
  cfg.T = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ++cfg.seed;
    benchmark::DoNotOptimize(simulate_path(cfg));
  }
}
BENCHMARK(BM_Simulate)->Arg(200);

static void BM_Bootstrap(benchmark::State& state) {
  const TimeSeriesFrame f = sample(200);
  BootstrapConfig cfg;
  cfg.replicates = static_cast<int>(state.range(0));
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(bootstrap_tests(f, kSpec, cfg));
}
BENCHMARK(BM_Bootstrap)->Arg(199)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
