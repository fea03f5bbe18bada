#include "qae/oracle.hpp"

#include <bit>
#include <cmath>

#include "qae/errors.hpp"

namespace qae {
namespace oracle {

Spectrum full_spectrum(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw DomainError("matrix is not square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw DomainError("eigensolver failed to converge");

  Spectrum s;
  s.eigenvalues.assign(solver.eigenvalues().data(),
                       solver.eigenvalues().data() + m.rows());
  Eigen::VectorXd v = solver.eigenvectors().col(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] != 0.0) {
      if (v[i] < 0.0) v = -v;
      break;
    }
  }
  s.ground_vector.assign(v.data(), v.data() + v.size());
  return s;
}

std::pair<double, std::vector<double>> exact_ground(const CiHamiltonian& h,
                                                    std::size_t cap) {
  if (static_cast<std::size_t>(h.dimension()) > cap)
    throw CapacityError("matrix dimension " + std::to_string(h.dimension()) +
                        " exceeds cap " + std::to_string(cap));
  Spectrum s = full_spectrum(h.matrix);
  return {s.eigenvalues.front() + h.scalar_offset, std::move(s.ground_vector)};
}

namespace {

inline int spin_of(int so) { return so & 1; }
inline int spatial_of(int so) { return so >> 1; }

// Apply an annihilation (create = false) or creation operator to a
// determinant; returns false when the result vanishes, otherwise updates
// mask and multiplies the Jordan-Wigner sign into `sign`.
bool apply_ladder(std::uint64_t& mask, int orbital, bool create, int& sign) {
  const std::uint64_t bit = std::uint64_t{1} << orbital;
  if (create == bool(mask & bit)) return false;
  const std::uint64_t below = mask & (bit - 1);
  if (std::popcount(below) & 1) sign = -sign;
  mask ^= bit;
  return true;
}

}  // namespace

Eigen::MatrixXd brute_force_hamiltonian(const IntegralSet& ints,
                                        const std::vector<Determinant>& basis) {
  const int n_so = static_cast<int>(ints.n_spin_orbitals());
  if (n_so > 8)
    throw CapacityError("brute-force operator application limited to 8 spin "
                        "orbitals, got " +
                        std::to_string(n_so));

  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  // Column j of H is the expansion of H|Phi_j> over the basis, so the
  // element H(i, j) is the coefficient picked up by determinant i.
  std::vector<Eigen::Index> index_of(std::size_t{1} << n_so,
                                     Eigen::Index{-1});
  for (Eigen::Index j = 0; j < n; ++j) index_of[basis[j].mask] = j;

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);

  for (Eigen::Index j = 0; j < n; ++j) {
    const std::uint64_t ket = basis[j].mask;

    // sum_pq h_pq a+_p a_q  (spin orbitals; diagonal in spin)
    for (int p = 0; p < n_so; ++p) {
      for (int q = 0; q < n_so; ++q) {
        if (spin_of(p) != spin_of(q)) continue;
        const double hpq = ints.one_body(spatial_of(p), spatial_of(q));
        if (hpq == 0.0) continue;
        std::uint64_t state = ket;
        int sign = 1;
        if (!apply_ladder(state, q, false, sign)) continue;
        if (!apply_ladder(state, p, true, sign)) continue;
        const Eigen::Index i = index_of[state];
        if (i >= 0) h(i, j) += sign * hpq;
      }
    }

    // 1/2 sum_pqrs <pq|rs> a+_p a+_q a_s a_r with
    // <pq|rs> = delta(sp,sr) delta(sq,ss) (PR|QS)
    for (int p = 0; p < n_so; ++p) {
      for (int q = 0; q < n_so; ++q) {
        for (int r = 0; r < n_so; ++r) {
          if (spin_of(p) != spin_of(r)) continue;
          for (int s = 0; s < n_so; ++s) {
            if (spin_of(q) != spin_of(s)) continue;
            const double g = ints.two_body(spatial_of(p), spatial_of(r),
                                           spatial_of(q), spatial_of(s));
            if (g == 0.0) continue;
            std::uint64_t state = ket;
            int sign = 1;
            if (!apply_ladder(state, r, false, sign)) continue;
            if (!apply_ladder(state, s, false, sign)) continue;
            if (!apply_ladder(state, q, true, sign)) continue;
            if (!apply_ladder(state, p, true, sign)) continue;
            const Eigen::Index i = index_of[state];
            if (i >= 0) h(i, j) += 0.5 * sign * g;
          }
        }
      }
    }
  }
  return h;
}

Eigen::MatrixXd brute_force_hamiltonian(const IntegralSet& ints,
                                        const ActiveSpace& space) {
  return brute_force_hamiltonian(ints, generate_fci_basis(space));
}

std::pair<BitVec, double> enumerate_qubo_minimum(const QuboProblem& q) {
  const int n = q.n_vars();
  if (n < 1) throw ConfigError("empty problem");
  if (n > 24)
    throw CapacityError("enumeration limited to 24 variables, got " +
                        std::to_string(n));

  BitVec best(n);
  double best_energy = q.energy(best);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 1; m < total; ++m) {
    BitVec cand(n);
    cand.words()[0] = m;
    const double e = q.energy(cand);
    if (e < best_energy || (e == best_energy && cand.lex_less(best))) {
      best = cand;
      best_energy = e;
    }
  }
  return {best, best_energy};
}

}  // namespace oracle
}  // namespace qae
