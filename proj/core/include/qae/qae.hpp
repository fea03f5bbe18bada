#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qae/anneal.hpp"
#include "qae/ci.hpp"
#include "qae/encoding.hpp"
#include "qae/refine.hpp"

namespace qae {

/// Full eigensolver configuration: a uniform lambda grid over
/// [lambda_min, lambda_max], independent repeats, the coefficient
/// encoding and the sub-problem size cap.
struct QaeConfig {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  int lambda_points = 51;
  int repeats = 3;
  EncodingConfig encoding;
  AnnealSchedule schedule;
  int max_subqubo_vars = 60;
  /// Opt-in: sample the sub-problems of one (lambda, repeat) step
  /// concurrently. Deterministic either way (seeds are per sub-problem).
  bool parallel_sub_qubos = false;
};

/// One (lambda, repeat) record of the scan.
struct TraceEntry {
  int lambda_index = 0;
  double lambda = 0.0;
  int repeat = 0;
  double raw_xi = 0.0;      // merged sub-solutions, before refinement
  double refined_xi = 0.0;  // after steepest descent on the full problem
  double energy = 0.0;      // Rayleigh quotient + scalar offset
  int flips = 0;
  bool degenerate = false;  // decoded to the zero vector; discarded
};

struct QaeResult {
  double best_energy = 0.0;
  std::vector<double> best_coefficients;
  double best_lambda = 0.0;
  int best_lambda_index = -1;
  int best_repeat = -1;
  BitVec best_bits;
  std::vector<TraceEntry> trace;
  int degenerate_points = 0;
};

/// Run the scan: for every lambda grid point and repeat, order the
/// coefficients perturbatively, partition into sub-problems, sample each
/// independently, merge the best assignments, refine by steepest descent
/// on the full objective, decode, and score with the Rayleigh quotient.
/// Returns the minimum-energy record (ties: smaller lambda index, then
/// smaller repeat). Degenerate all-zero decodes are counted and skipped;
/// if every point degenerates, throws NoSolutionError.
///
/// Seeding: the (lambda, repeat) stream is schedule.seed ^
/// splitmix64((lambda_index << 32) ^ repeat); sub-problem m of that step
/// re-derives with (m, 0x5b).
QaeResult run_qae(const CiHamiltonian& h, const QaeConfig& cfg,
                  const Sampler& sampler);

/// Lambda interval guaranteed to enclose the lowest eigenvalue:
/// the upper end is H_00 (a variational upper bound), the lower end sits
/// `margin * |H_00|` below the Gershgorin lower bound min_i(H_ii - R_i).
std::pair<double, double> default_lambda_bracket(const CiHamiltonian& h,
                                                 double margin = 0.05);

}  // namespace qae
