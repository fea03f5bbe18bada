#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qae/bitvec.hpp"
#include "qae/errors.hpp"

namespace qae {

/// Fixed-point encoding width. Each coefficient c_i is carried by K bits:
/// the first K-1 bits hold the fractional part with weights 2^(a-K) for
/// a = 1..K-1, and the last bit subtracts 1 (the sign bit). Decoded values
/// cover [-1, 1 - 2^(1-K)] on a uniform grid of spacing 2^(1-K).
struct EncodingConfig {
  int k_bits = 10;
};

/// Quadratic unconstrained binary objective
///   E(q) = offset + sum_a linear[a] q_a + sum_{a<b} quad[(a,b)] q_a q_b.
/// Quadratic keys are strictly upper triangular; self-pairs are rejected
/// (q^2 = q belongs in the linear part).
class QuboProblem {
 public:
  QuboProblem() = default;
  explicit QuboProblem(int n_vars);

  int n_vars() const { return n_vars_; }
  double offset() const { return offset_; }
  void set_offset(double v) { offset_ = v; }

  void add_linear(int a, double w);
  void add_quadratic(int a, int b, double w);

  double linear(int a) const { return linear_[a]; }
  double quadratic(int a, int b) const;

  const std::vector<double>& linear_terms() const { return linear_; }
  const std::unordered_map<std::uint64_t, double>& quadratic_terms() const {
    return quad_;
  }

  double energy(const BitVec& q) const;

  /// Largest |coefficient| over linear and quadratic terms.
  double max_abs_coefficient() const;

  /// Sorted (a, b, weight) triples; the text export format is one
  /// `i j value` line per triple with linear terms written as `i i value`.
  std::vector<std::tuple<int, int, double>> sorted_entries() const;

 private:
  int n_vars_ = 0;
  double offset_ = 0.0;
  std::vector<double> linear_;
  std::unordered_map<std::uint64_t, double> quad_;
};

void write_qubo(const QuboProblem& q, std::ostream& out);

/// Adjacency-compiled form for samplers: per-variable neighbor lists.
struct CompiledQubo {
  int n = 0;
  double offset = 0.0;
  std::vector<double> linear;
  std::vector<std::size_t> row_begin;  // size n+1
  std::vector<int> neighbor;
  std::vector<double> weight;

  double energy(const BitVec& q) const;
  /// Local fields f_a = linear_a + sum_b w_ab q_b for the given state.
  void fields(const BitVec& q, std::vector<double>& f) const;
};

CompiledQubo compile_qubo(const QuboProblem& q);

/// Decode K bits into a coefficient (see EncodingConfig).
double decode_coefficient(std::span<const int> bits);

/// Weight of bit b (0-based) within a K-bit coefficient.
double encoding_bit_weight(int b, int k_bits);

/// Decode a packed assignment of n_coeffs * k_bits binary variables;
/// variable i*k_bits + b is bit b of coefficient i.
std::vector<double> decode_coefficients(const BitVec& q, int n_coeffs,
                                        int k_bits);

/// Exact binary expansion of the constrained energy functional
///   xi(c, lambda) = sum_ij c_i c_j (H_ij - lambda delta_ij)
/// under the fixed-point encoding: for every assignment q,
/// qubo.energy(q) == xi(decode(q), lambda) to rounding. Diagonal q^2
/// terms are folded into the linear part. Throws DomainError when the
/// matrix is not symmetric within 1e-10.
QuboProblem build_qubo(const Eigen::MatrixXd& h, double lambda,
                       const EncodingConfig& cfg);

/// One sub-problem of a partitioned QUBO: the restriction of the full
/// functional to a contiguous group of coefficient indices (in sorted
/// order); quadratic couplings to every other group are dropped.
struct SubQubo {
  std::vector<int> parent_coeff_indices;
  QuboProblem problem;
  /// var_map[local_var] = (coefficient index in the full problem, bit).
  std::vector<std::pair<int, int>> var_map;
};

/// Split the N*K-variable problem into groups of floor(max_vars / k_bits)
/// coefficients following `order` (a permutation of 0..N-1); the groups
/// cover every index. Throws ConfigError when max_vars < k_bits.
std::vector<SubQubo> partition_sub_qubos(const Eigen::MatrixXd& h,
                                         double lambda,
                                         const EncodingConfig& cfg,
                                         std::span<const int> order,
                                         int max_vars);

/// Write the sub-solution into the full assignment through var_map.
void scatter_sub_assignment(const SubQubo& sub, const BitVec& local,
                            int k_bits, BitVec& full);

}  // namespace qae
