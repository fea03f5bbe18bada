#include <doctest.h>

#include <random>

#include "qae/anneal.hpp"
#include "qae/oracle.hpp"
#include "test_util.hpp"

using namespace qae;

namespace {

QuboProblem random_qubo(int n, std::mt19937_64& rng, double density = 0.5) {
  QuboProblem q(n);
  for (int a = 0; a < n; ++a) q.add_linear(a, testutil::uniform_pm1(rng));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (uniform01(rng) < density)
        q.add_quadratic(a, b, testutil::uniform_pm1(rng));
  return q;
}

}  // namespace

TEST_CASE("sample: one-variable problem") {
  QuboProblem q(1);
  q.add_linear(0, -1.0);
  AnnealSchedule sched;
  sched.sweeps = 10;
  sched.reads = 20;
  sched.seed = 1;
  const SampleSet set = SimulatedAnnealer().sample(q, sched);
  CHECK(set.best().assignment.get(0) == true);
  CHECK(set.best().energy == -1.0);
}

TEST_CASE("sample: two variables with a repulsive coupling") {
  QuboProblem q(2);
  q.add_linear(0, -1.0);
  q.add_linear(1, -1.0);
  q.add_quadratic(0, 1, 3.0);
  AnnealSchedule sched;
  sched.sweeps = 20;
  sched.reads = 50;
  sched.seed = 2;
  const SampleSet set = SimulatedAnnealer().sample(q, sched);
  CHECK(set.best().energy == -1.0);
  CHECK(set.best().assignment.count() == 1);
}

TEST_CASE("sample set bookkeeping") {
  std::mt19937_64 rng(4);
  const QuboProblem q = random_qubo(8, rng);
  AnnealSchedule sched;
  sched.sweeps = 15;
  sched.reads = 64;
  sched.seed = 9;
  const SampleSet set = SimulatedAnnealer().sample(q, sched);

  int total = 0;
  for (std::size_t i = 0; i < set.samples.size(); ++i) {
    const auto& s = set.samples[i];
    total += s.occurrences;
    // Recorded energies re-evaluate exactly.
    CHECK(testutil::approx_abs(s.energy, q.energy(s.assignment), 1e-10));
    if (i > 0) CHECK(set.samples[i - 1].energy <= s.energy);
  }
  CHECK(total == sched.reads);
}

TEST_CASE("determinism: identical schedule gives bit-identical samples") {
  std::mt19937_64 rng(12);
  const QuboProblem q = random_qubo(14, rng);
  AnnealSchedule sched;
  sched.sweeps = 25;
  sched.reads = 40;
  sched.seed = 777;
  const SampleSet a = SimulatedAnnealer().sample(q, sched);
  const SampleSet b = SimulatedAnnealer().sample(q, sched);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].assignment == b.samples[i].assignment);
    CHECK(a.samples[i].energy == b.samples[i].energy);
    CHECK(a.samples[i].occurrences == b.samples[i].occurrences);
  }
}

TEST_CASE("incremental energies agree with full re-evaluation every sweep") {
  std::mt19937_64 rng(21);
  const QuboProblem q = random_qubo(20, rng);
  AnnealSchedule sched;
  sched.sweeps = 30;
  sched.reads = 1;
  sched.seed = 5;
  const auto trace = anneal_single_read_instrumented(q, sched, 5);
  REQUIRE(trace.size() == 30);
  for (const auto& rec : trace)
    CHECK(testutil::approx_abs(rec.incremental_energy,
                               q.energy(rec.assignment), 1e-9));
}

TEST_CASE("SA finds the global minimum of small problems") {
  std::mt19937_64 rng(1001);
  int hits = 0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    const QuboProblem q = random_qubo(12, rng, 0.8);
    const double exact = brute_force_minimum(q).second;
    AnnealSchedule sched;
    sched.sweeps = 100;
    sched.reads = 200;
    sched.seed = static_cast<std::uint64_t>(t);
    const SampleSet set = SimulatedAnnealer().sample(q, sched);
    if (std::abs(set.best().energy - exact) <= 1e-9) ++hits;
  }
  CHECK(hits >= 95);
}

TEST_CASE("brute force: tie rule and spot cases") {
  SUBCASE("all-zero problem keeps the all-zero assignment") {
    QuboProblem q(4);
    const auto [a, e] = brute_force_minimum(q);
    CHECK(e == 0.0);
    CHECK(a.any() == false);
  }
  SUBCASE("positive linear term stays off") {
    QuboProblem q(1);
    q.add_linear(0, 1.0);
    const auto [a, e] = brute_force_minimum(q);
    CHECK(e == 0.0);
    CHECK(a.get(0) == false);
  }
  SUBCASE("capacity") {
    QuboProblem q(25);
    CHECK_THROWS_AS(brute_force_minimum(q), CapacityError);
  }
}

TEST_CASE("brute-force sampler matches the enumeration oracle") {
  std::mt19937_64 rng(55);
  const QuboProblem q = random_qubo(10, rng);
  AnnealSchedule sched;
  sched.reads = 7;
  const SampleSet set = BruteForceSampler().sample(q, sched);
  const auto [a, e] = oracle::enumerate_qubo_minimum(q);
  CHECK(set.best().assignment == a);
  CHECK(testutil::approx_abs(set.best().energy, e, 1e-12));
  CHECK(set.best().occurrences == 7);
}

TEST_CASE("schedule validation") {
  QuboProblem q(2);
  q.add_linear(0, 1.0);
  AnnealSchedule sched;
  sched.t_start = 0.5;
  sched.t_end = 0.9;  // inverted
  CHECK_THROWS_AS(resolve_schedule(sched, q), ConfigError);
  sched.t_start = 0.0;
  sched.t_end = 0.0;
  sched.sweeps = 0;
  CHECK_THROWS_AS(resolve_schedule(sched, q), ConfigError);
  sched.sweeps = 5;
  const AnnealSchedule r = resolve_schedule(sched, q);
  CHECK(r.t_start == 1.0);  // max |coefficient|
  CHECK(r.t_end == doctest::Approx(1e-3));
}
