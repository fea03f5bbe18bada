#include "qae/qae.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "qae/errors.hpp"
#include "qae/rng.hpp"

namespace qae {

namespace {

bool all_zero(const std::vector<double>& c) {
  for (double v : c)
    if (v != 0.0) return false;
  return true;
}

}  // namespace

QaeResult run_qae(const CiHamiltonian& h, const QaeConfig& cfg,
                  const Sampler& sampler) {
  if (!(cfg.lambda_min < cfg.lambda_max))
    throw ConfigError("lambda interval requires lambda_min < lambda_max");
  if (cfg.lambda_points < 2)
    throw ConfigError("lambda grid needs at least 2 points");
  if (cfg.repeats < 1) throw ConfigError("repeats must be >= 1");

  const int n = static_cast<int>(h.dimension());
  const int k = cfg.encoding.k_bits;
  const auto order = perturbative_order(h);

  QaeResult result;
  result.best_energy = std::numeric_limits<double>::infinity();

  const double step =
      (cfg.lambda_max - cfg.lambda_min) / (cfg.lambda_points - 1);

  for (int li = 0; li < cfg.lambda_points; ++li) {
    const double lambda = cfg.lambda_min + li * step;
    auto subs = partition_sub_qubos(h.matrix, lambda, cfg.encoding,
                                    std::span<const int>(order),
                                    cfg.max_subqubo_vars);
    const QuboProblem full = build_qubo(h.matrix, lambda, cfg.encoding);
    const CompiledQubo full_compiled = compile_qubo(full);

    for (int rep = 0; rep < cfg.repeats; ++rep) {
      const std::uint64_t step_seed = derive_seed(
          cfg.schedule.seed, static_cast<std::uint64_t>(li),
          static_cast<std::uint64_t>(rep));

      BitVec merged(static_cast<std::size_t>(n) * k);
      auto sample_sub = [&](std::size_t m) {
        AnnealSchedule sched = cfg.schedule;
        sched.seed = derive_seed(step_seed, m, 0x5b);
        return sampler.sample(subs[m].problem, sched);
      };
      if (cfg.parallel_sub_qubos && subs.size() > 1) {
        std::vector<std::future<SampleSet>> futures;
        futures.reserve(subs.size());
        for (std::size_t m = 0; m < subs.size(); ++m)
          futures.push_back(
              std::async(std::launch::async, sample_sub, m));
        for (std::size_t m = 0; m < subs.size(); ++m)
          scatter_sub_assignment(subs[m], futures[m].get().best().assignment,
                                 k, merged);
      } else {
        for (std::size_t m = 0; m < subs.size(); ++m)
          scatter_sub_assignment(subs[m], sample_sub(m).best().assignment, k,
                                 merged);
      }

      TraceEntry entry;
      entry.lambda_index = li;
      entry.lambda = lambda;
      entry.repeat = rep;
      entry.raw_xi = full_compiled.energy(merged);

      const BitVec refined =
          steepest_descent(full_compiled, merged, &entry.flips);
      entry.refined_xi = full_compiled.energy(refined);

      const auto coeffs = decode_coefficients(refined, n, k);
      if (all_zero(coeffs)) {
        entry.degenerate = true;
        ++result.degenerate_points;
        result.trace.push_back(entry);
        continue;
      }
      entry.energy = rayleigh_energy(coeffs, h);
      result.trace.push_back(entry);

      if (entry.energy < result.best_energy) {
        result.best_energy = entry.energy;
        result.best_coefficients = coeffs;
        result.best_lambda = lambda;
        result.best_lambda_index = li;
        result.best_repeat = rep;
        result.best_bits = refined;
      }
    }
  }

  if (result.best_lambda_index < 0)
    throw NoSolutionError("every lambda point decoded to the zero vector");
  return result;
}

std::pair<double, double> default_lambda_bracket(const CiHamiltonian& h,
                                                 double margin) {
  if (!(margin > 0.0)) throw ConfigError("margin must be positive");
  const Eigen::Index n = h.dimension();
  const double h00 = h.matrix(0, 0);

  // Gershgorin enclosure: every eigenvalue is >= min_i (H_ii - R_i).
  double lower = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    double radius = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (j != i) radius += std::abs(h.matrix(i, j));
    lower = std::min(lower, h.matrix(i, i) - radius);
  }
  const double pad = std::max(0.0, h00 - lower);
  return {h00 - margin * std::abs(h00) - pad, h00};
}

}  // namespace qae
