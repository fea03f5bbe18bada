#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "qae/anneal.hpp"
#include "qae/ci.hpp"
#include "qae/determinant.hpp"
#include "qae/integrals.hpp"

namespace qae {
namespace oracle {

/// Full eigendecomposition of a symmetric matrix: eigenvalues ascending,
/// ground vector unit-norm with its first nonzero entry positive.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<double> ground_vector;
};

Spectrum full_spectrum(const Eigen::MatrixXd& m);

/// Lowest eigenpair of the Hamiltonian, scalar offset included in the
/// energy. Throws CapacityError beyond `cap` rows.
std::pair<double, std::vector<double>> exact_ground(const CiHamiltonian& h,
                                                    std::size_t cap = 4096);

/// Reference Hamiltonian by direct second-quantized operator application:
/// every a+_p a_q and a+_p a+_q a_s a_r term is applied to each basis
/// determinant with explicit fermionic signs, with no use of the
/// Slater-Condon shortcuts. Limited to 8 spin orbitals (CapacityError).
Eigen::MatrixXd brute_force_hamiltonian(const IntegralSet& ints,
                                        const std::vector<Determinant>& basis);
Eigen::MatrixXd brute_force_hamiltonian(const IntegralSet& ints,
                                        const ActiveSpace& space);

/// Reference QUBO minimum by plain per-assignment evaluation, independent
/// of the incremental enumerator in the sampler module. Ties resolve to
/// the lexicographically smallest assignment. Limited to 24 variables.
std::pair<BitVec, double> enumerate_qubo_minimum(const QuboProblem& q);

}  // namespace oracle
}  // namespace qae
