#include <benchmark/benchmark.h>

#include <random>

#include "qae/ci.hpp"
#include "qae/oracle.hpp"
#include "qae/rng.hpp"

namespace {

qae::IntegralSet random_integrals(int n_spatial, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  qae::IntegralSet ints;
  ints.n_spatial_orbitals = n_spatial;
  for (int p = 0; p < n_spatial; ++p)
    for (int q = 0; q <= p; ++q)
      ints.set_one_body(p, q, 2.0 * qae::uniform01(rng) - 1.0);
  for (int p = 0; p < n_spatial; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= r; ++s) {
          if (qae::IntegralSet::one_body_key(p, q) <
              qae::IntegralSet::one_body_key(r, s))
            continue;
          ints.set_two_body(p, q, r, s, qae::uniform01(rng) - 0.5);
        }
  return ints;
}

void BM_AssembleHamiltonian(benchmark::State& state) {
  const int n_spatial = static_cast<int>(state.range(0));
  const qae::IntegralSet ints = random_integrals(n_spatial, 17);
  const qae::ActiveSpace space{2 * n_spatial, 3, ""};
  const auto basis = qae::generate_fci_basis(space);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qae::assemble_hamiltonian(basis, ints));
  }
  state.SetLabel(std::to_string(basis.size()) + " determinants");
}
BENCHMARK(BM_AssembleHamiltonian)->Arg(3)->Arg(4)->Arg(6);

void BM_ExactGround(benchmark::State& state) {
  std::mt19937_64 rng(23);
  qae::CiHamiltonian h;
  const int n = static_cast<int>(state.range(0));
  h.matrix.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double v = 2.0 * qae::uniform01(rng) - 1.0;
      h.matrix(i, j) = v;
      h.matrix(j, i) = v;
    }
  for (auto _ : state) {
    benchmark::DoNotOptimize(qae::oracle::exact_ground(h));
  }
}
BENCHMARK(BM_ExactGround)->Arg(64)->Arg(256);

}  // namespace
