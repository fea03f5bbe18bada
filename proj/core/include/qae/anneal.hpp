#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qae/bitvec.hpp"
#include "qae/encoding.hpp"

namespace qae {

/// Annealing run controls. t_start/t_end of 0 mean "derive from the
/// problem": t_start = max |coefficient| (1.0 for an all-zero problem),
/// t_end = 1e-3 * t_start. After resolution t_start > t_end > 0 must hold.
struct AnnealSchedule {
  double t_start = 0.0;
  double t_end = 0.0;
  int sweeps = 1000;
  int reads = 1000;
  std::uint64_t seed = 0;
};

/// Resolve auto temperatures against a problem and validate.
AnnealSchedule resolve_schedule(const AnnealSchedule& sched,
                                const QuboProblem& q);

struct Sample {
  BitVec assignment;
  double energy = 0.0;
  int occurrences = 0;
};

/// Samples sorted ascending by energy (ties: lexicographic assignment);
/// occurrences sum to the schedule's read count.
struct SampleSet {
  std::vector<Sample> samples;
  const Sample& best() const { return samples.front(); }
};

class Sampler {
 public:
  virtual ~Sampler() = default;
  virtual SampleSet sample(const QuboProblem& q,
                           const AnnealSchedule& sched) const = 0;
  virtual std::string name() const = 0;
};

/// Single-flip Metropolis annealer with a geometric temperature schedule
///   T_k = t_start * (t_end / t_start)^(k / (sweeps - 1)).
/// Each read restarts from a random assignment; read r draws from an
/// independent generator seeded with seed ^ r, so results are identical
/// regardless of read execution order. The sweep visit order is
/// re-permuted every sweep from the read's generator.
class SimulatedAnnealer final : public Sampler {
 public:
  SampleSet sample(const QuboProblem& q,
                   const AnnealSchedule& sched) const override;
  std::string name() const override { return "sa"; }
};

/// Exhaustive enumeration posing as a sampler; returns the exact optimum
/// with occurrences equal to the read count. Limited to 24 variables.
class BruteForceSampler final : public Sampler {
 public:
  SampleSet sample(const QuboProblem& q,
                   const AnnealSchedule& sched) const override;
  std::string name() const override { return "brute"; }
};

std::unique_ptr<Sampler> make_sampler(const std::string& name);

/// Exact global minimum by Gray-code enumeration (n_vars <= 24, else
/// CapacityError). Ties resolve to the lexicographically smallest
/// assignment.
std::pair<BitVec, double> brute_force_minimum(const QuboProblem& q);

/// Test hook: one annealing read with the per-sweep incremental energy
/// and assignment recorded, to audit the incremental bookkeeping against
/// full re-evaluation.
struct SweepRecord {
  double incremental_energy;
  BitVec assignment;
};
std::vector<SweepRecord> anneal_single_read_instrumented(
    const QuboProblem& q, const AnnealSchedule& sched, std::uint64_t read_seed);

}  // namespace qae
