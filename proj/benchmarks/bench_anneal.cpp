#include <benchmark/benchmark.h>

#include <random>

#include "qae/anneal.hpp"
#include "qae/oracle.hpp"
#include "qae/qae.hpp"
#include "qae/refine.hpp"
#include "qae/rng.hpp"

namespace {

Eigen::MatrixXd random_symmetric(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double v = 2.0 * qae::uniform01(rng) - 1.0;
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

qae::QuboProblem eigens_qubo(int n, int k, std::uint64_t seed) {
  const Eigen::MatrixXd h = random_symmetric(n, seed);
  return qae::build_qubo(h, h(0, 0) - 1.0, {k});
}

void BM_SampleEigensolverQubo(benchmark::State& state) {
  const qae::QuboProblem q =
      eigens_qubo(static_cast<int>(state.range(0)), 10, 7);
  qae::SimulatedAnnealer sa;
  qae::AnnealSchedule sched;
  sched.reads = 100;
  sched.sweeps = 30;
  sched.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sa.sample(q, sched));
  }
  state.SetItemsProcessed(state.iterations() * sched.reads * sched.sweeps *
                          q.n_vars());
}
BENCHMARK(BM_SampleEigensolverQubo)->Arg(6)->Arg(8)->Arg(12);

void BM_SteepestDescent(benchmark::State& state) {
  const qae::QuboProblem q =
      eigens_qubo(static_cast<int>(state.range(0)), 10, 11);
  std::mt19937_64 rng(5);
  for (auto _ : state) {
    state.PauseTiming();
    qae::BitVec start(q.n_vars());
    for (int i = 0; i < q.n_vars(); ++i) start.set(i, rng() & 1);
    state.ResumeTiming();
    benchmark::DoNotOptimize(qae::steepest_descent(q, start));
  }
}
BENCHMARK(BM_SteepestDescent)->Arg(8)->Arg(16)->Arg(32);

void BM_BruteForceMinimum(benchmark::State& state) {
  const qae::QuboProblem q = eigens_qubo(2, static_cast<int>(state.range(0)),
                                         3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qae::brute_force_minimum(q));
  }
}
BENCHMARK(BM_BruteForceMinimum)->Arg(8)->Arg(10);

void BM_BuildQubo(benchmark::State& state) {
  const Eigen::MatrixXd h =
      random_symmetric(static_cast<int>(state.range(0)), 21);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qae::build_qubo(h, -1.0, {10}));
  }
}
BENCHMARK(BM_BuildQubo)->Arg(8)->Arg(32)->Arg(64);

}  // namespace
