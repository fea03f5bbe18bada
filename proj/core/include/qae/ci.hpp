#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qae/determinant.hpp"
#include "qae/integrals.hpp"

namespace qae {

/// Symmetric one-body operator in the spatial-orbital basis (e.g. the
/// z-dipole matrix elements used for field perturbations).
class OneBodyOperator {
 public:
  double get(int p, int q) const;
  void set(int p, int q, double value);
  bool empty() const { return entries_.empty(); }
  const std::map<std::uint64_t, double>& entries() const { return entries_; }

 private:
  std::map<std::uint64_t, double> entries_;
};

/// Parse lines `value p q` (1-based spatial orbital indices).
OneBodyOperator parse_one_body_operator(std::istream& in);
OneBodyOperator parse_one_body_operator_file(const std::string& path);

/// Uniform electric-field perturbation H = H0 + epsilon * O. When epsilon
/// is nonzero the dipole integrals must be present; the alternative is to
/// assemble from a separately pre-perturbed IntegralSet with no field.
struct FieldSpec {
  double epsilon = 0.0;
  std::optional<OneBodyOperator> dipole_integrals;
};

/// Dense CI Hamiltonian over an ordered determinant basis. The matrix is
/// the electronic part only; scalar_offset (core + nuclear repulsion) is
/// added after the eigenproblem is solved.
struct CiHamiltonian {
  std::vector<Determinant> basis;  // basis[0] is the reference
  Eigen::MatrixXd matrix;
  double scalar_offset = 0.0;

  Eigen::Index dimension() const { return matrix.rows(); }
};

/// Slater-Condon matrix element <a|H|b> for determinants over the spin
/// orbitals of `ints` (spin orbital 2p = alpha of spatial p, 2p+1 = beta).
/// Fermionic phases follow the ascending spin-orbital operator ordering.
/// Zero when the determinants differ in more than two spin orbitals.
/// Throws DomainError on electron-count mismatch.
double slater_condon_element(Determinant a, Determinant b,
                             const IntegralSet& ints);

/// Assemble H_ij over `basis`. With a field, the one-body integrals are
/// shifted to h_pq + epsilon * O_pq before the Slater-Condon rules run.
/// Throws ConfigError when epsilon != 0 but no dipole integrals are given.
CiHamiltonian assemble_hamiltonian(const std::vector<Determinant>& basis,
                                   const IntegralSet& ints,
                                   const FieldSpec* field = nullptr);

/// First-order perturbation estimates of the CI coefficients:
///   c~_0 = 1,  c~_i = H_i0 / (H_00 - H_ii).
/// Denominators below 1e-8 in magnitude are clamped sign-preservingly;
/// the affected indices are reported in `clamped`.
struct PerturbativeEstimates {
  std::vector<double> values;
  std::vector<int> clamped;
};
PerturbativeEstimates perturbative_coefficients(const CiHamiltonian& h);

/// Basis permutation: reference first, then descending |c~|, ties broken
/// by lower original index. This is the ordering used to group
/// coefficients into sub-problems.
std::vector<int> perturbative_order(const CiHamiltonian& h);

/// Keep the reference plus the n_keep-1 largest-|c~| determinants and
/// return the corresponding sub-matrix, rows/columns permuted to the
/// perturbative order.
CiHamiltonian select_determinants(const CiHamiltonian& h, std::size_t n_keep);

}  // namespace qae
