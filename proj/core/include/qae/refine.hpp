#pragma once

#include <span>
#include <vector>

#include "qae/bitvec.hpp"
#include "qae/ci.hpp"
#include "qae/encoding.hpp"

namespace qae {

/// Outcome of decoding and refining one binary solution.
struct RefinedSolution {
  BitVec bits;
  std::vector<double> coefficients;
  double xi_value = 0.0;
  double rayleigh_energy = 0.0;
  int flips_applied = 0;
};

/// Greedy single-bit descent on the full objective: repeatedly flips the
/// bit with the largest energy decrease, stopping when no flip improves
/// by more than 1e-12. The result never has higher energy than the start.
BitVec steepest_descent(const QuboProblem& q, const BitVec& start,
                        int* flips_applied = nullptr);
BitVec steepest_descent(const CompiledQubo& c, const BitVec& start,
                        int* flips_applied = nullptr);

/// Variational energy estimate (c^T H c) / (c^T c) + scalar offset.
/// Throws DegenerateError on an all-zero coefficient vector.
double rayleigh_energy(std::span<const double> c, const CiHamiltonian& h);

}  // namespace qae
