#include "qae/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qae/errors.hpp"
#include "qae/rng.hpp"

namespace qae {

AnnealSchedule resolve_schedule(const AnnealSchedule& sched,
                                const QuboProblem& q) {
  AnnealSchedule r = sched;
  if (r.t_start == 0.0 && r.t_end == 0.0) {
    const double scale = q.max_abs_coefficient();
    r.t_start = scale > 0.0 ? scale : 1.0;
    r.t_end = 1e-3 * r.t_start;
  }
  if (!(r.t_start > r.t_end && r.t_end > 0.0))
    throw ConfigError("anneal schedule requires t_start > t_end > 0");
  if (r.sweeps < 1 || r.reads < 1)
    throw ConfigError("anneal schedule requires sweeps >= 1 and reads >= 1");
  return r;
}

namespace {

// exp(-x) underflows all acceptance draws beyond this point: the uniform
// draw is at least 2^-53 and exp(-40) < 2^-53.
constexpr double kRejectExponent = 40.0;

struct ReadResult {
  BitVec assignment;
  double energy;
};

// Symmetric coupling matrix with contiguous rows (zero diagonal). The
// field update after a flip touches the whole row, which vectorizes;
// adding the zero entries of absent couplings leaves the fields
// bit-identical to a sparse walk.
struct DenseCoupling {
  int n = 0;
  std::vector<double> w;  // row-major n*n

  explicit DenseCoupling(const QuboProblem& q)
      : n(q.n_vars()), w(static_cast<std::size_t>(q.n_vars()) * q.n_vars(),
                        0.0) {
    for (const auto& [key, value] : q.quadratic_terms()) {
      const auto a = static_cast<std::size_t>(key >> 32);
      const auto b = static_cast<std::size_t>(key & 0xffffffffu);
      w[a * n + b] = value;
      w[b * n + a] = value;
    }
  }
  const double* row(int a) const {
    return w.data() + static_cast<std::size_t>(a) * n;
  }
};

// Scratch buffers shared across the reads of one sample() call.
struct ReadWorkspace {
  std::vector<double> fields;
  std::vector<int> visit;
};

// Energy from the current local fields in O(n):
//   E = offset + 1/2 sum_a q_a (f_a + linear_a).
double energy_from_fields(const CompiledQubo& c, const BitVec& q,
                          const std::vector<double>& f) {
  double acc = 0.0;
  for (int a = 0; a < c.n; ++a)
    if (q.get(a)) acc += f[a] + c.linear[a];
  return c.offset + 0.5 * acc;
}

// One Metropolis read. Fields f[a] = linear_a + sum_b w_ab q_b are kept
// incrementally; flipping variable a changes the energy by (1-2q_a) f[a].
ReadResult run_read(const CompiledQubo& c, const DenseCoupling& dense,
                    const AnnealSchedule& sched, std::uint64_t read_seed,
                    ReadWorkspace& ws, std::vector<SweepRecord>* trace) {
  Xoshiro256pp rng(read_seed);
  const int n = c.n;

  BitVec q(n);
  for (int a = 0; a < n; a += 64) {
    const std::uint64_t w = rng();
    q.words()[a / 64] = w;
  }
  if (n % 64)
    q.words().back() &= (std::uint64_t{1} << (n % 64)) - 1;

  std::vector<double>& f = ws.fields;
  f.assign(c.linear.begin(), c.linear.end());
  for (int b = 0; b < n; ++b) {
    if (!q.get(b)) continue;
    const double* row = dense.row(b);
    for (int a = 0; a < n; ++a) f[a] += row[a];
  }
  double energy = energy_from_fields(c, q, f);

  std::vector<int>& visit = ws.visit;
  visit.resize(n);
  std::iota(visit.begin(), visit.end(), 0);

  const double ratio = sched.t_end / sched.t_start;
  const double log_ratio = std::log(ratio);

  for (int k = 0; k < sched.sweeps; ++k) {
    const double t =
        sched.sweeps == 1
            ? sched.t_start
            : sched.t_start * std::exp(log_ratio * k / (sched.sweeps - 1));
    const double reject_above = kRejectExponent * t;
    shuffle_inplace(visit, rng);
    int accepted = 0;
    for (int idx = 0; idx < n; ++idx) {
      const int a = visit[idx];
      const bool qa = q.get(a);
      const double delta = qa ? -f[a] : f[a];
      bool accept;
      if (delta <= 0.0) {
        accept = true;
      } else if (delta >= reject_above) {
        accept = false;
      } else {
        accept = uniform01(rng) < std::exp(-delta / t);
      }
      if (accept) {
        ++accepted;
        q.flip(a);
        energy += delta;
        const double step = qa ? -1.0 : 1.0;
        const double* row = dense.row(a);
        for (int b = 0; b < n; ++b) f[b] += row[b] * step;
      }
    }
    if (trace) trace->push_back({energy, q});
    if (accepted == 0 && !trace) {
      // A zero-accept sweep means every single flip is uphill. If even
      // the smallest uphill step is beyond acceptance at this (and so at
      // every colder) temperature, the state can never change again and
      // the remaining sweeps are pure no-ops.
      double dmin = std::numeric_limits<double>::infinity();
      for (int a = 0; a < n; ++a) {
        const double delta = q.get(a) ? -f[a] : f[a];
        if (delta < dmin) dmin = delta;
      }
      if (dmin >= reject_above) break;
    }
  }
  const double final_energy = energy_from_fields(c, q, f);
  return {std::move(q), final_energy};
}

SampleSet aggregate_reads(std::vector<ReadResult>&& reads) {
  std::sort(reads.begin(), reads.end(),
            [](const ReadResult& x, const ReadResult& y) {
              if (x.energy != y.energy) return x.energy < y.energy;
              return x.assignment.lex_less(y.assignment);
            });
  SampleSet set;
  for (auto& r : reads) {
    if (!set.samples.empty() &&
        set.samples.back().assignment == r.assignment) {
      ++set.samples.back().occurrences;
    } else {
      set.samples.push_back({std::move(r.assignment), r.energy, 1});
    }
  }
  return set;
}

}  // namespace

SampleSet SimulatedAnnealer::sample(const QuboProblem& q,
                                    const AnnealSchedule& sched_in) const {
  if (q.n_vars() < 1) throw ConfigError("empty problem");
  const AnnealSchedule sched = resolve_schedule(sched_in, q);
  const CompiledQubo c = compile_qubo(q);
  const DenseCoupling dense(q);

  ReadWorkspace ws;
  std::vector<ReadResult> reads;
  reads.reserve(sched.reads);
  for (int r = 0; r < sched.reads; ++r)
    reads.push_back(run_read(c, dense, sched,
                             sched.seed ^ static_cast<std::uint64_t>(r), ws,
                             nullptr));
  return aggregate_reads(std::move(reads));
}

std::vector<SweepRecord> anneal_single_read_instrumented(
    const QuboProblem& q, const AnnealSchedule& sched_in,
    std::uint64_t read_seed) {
  const AnnealSchedule sched = resolve_schedule(sched_in, q);
  const CompiledQubo c = compile_qubo(q);
  const DenseCoupling dense(q);
  ReadWorkspace ws;
  std::vector<SweepRecord> trace;
  run_read(c, dense, sched, read_seed, ws, &trace);
  return trace;
}

SampleSet BruteForceSampler::sample(const QuboProblem& q,
                                    const AnnealSchedule& sched) const {
  auto [assignment, energy] = brute_force_minimum(q);
  SampleSet set;
  set.samples.push_back(
      {std::move(assignment), energy, std::max(1, sched.reads)});
  return set;
}

std::unique_ptr<Sampler> make_sampler(const std::string& name) {
  if (name == "sa") return std::make_unique<SimulatedAnnealer>();
  if (name == "brute") return std::make_unique<BruteForceSampler>();
  throw ConfigError("unknown sampler: " + name + " (expected sa or brute)");
}

std::pair<BitVec, double> brute_force_minimum(const QuboProblem& q) {
  const int n = q.n_vars();
  if (n < 1) throw ConfigError("empty problem");
  if (n > 24)
    throw CapacityError("brute force limited to 24 variables, got " +
                        std::to_string(n));

  const CompiledQubo c = compile_qubo(q);
  BitVec state(n);
  std::vector<double> f(c.linear);
  double energy = c.offset;

  BitVec best = state;
  double best_energy = energy;

  // Gray-code walk: step k flips bit ctz(k), visiting all 2^n states.
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    const int a = std::countr_zero(k);
    const bool qa = state.get(a);
    energy += qa ? -f[a] : f[a];
    state.flip(a);
    const double step = qa ? -1.0 : 1.0;
    for (std::size_t e = c.row_begin[a]; e < c.row_begin[a + 1]; ++e)
      f[c.neighbor[e]] += c.weight[e] * step;
    if (energy < best_energy ||
        (energy == best_energy && state.lex_less(best))) {
      best = state;
      best_energy = energy;
    }
  }
  // Exact value for the winner, free of incremental rounding.
  return {best, c.energy(best)};
}

}  // namespace qae
