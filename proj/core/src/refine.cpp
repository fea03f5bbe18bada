#include "qae/refine.hpp"

#include <cmath>

#include "qae/errors.hpp"

namespace qae {

namespace {
constexpr double kDescentTol = 1e-12;
}

BitVec steepest_descent(const CompiledQubo& c, const BitVec& start,
                        int* flips_applied) {
  const int n = c.n;
  BitVec q = start;
  std::vector<double> f;
  c.fields(q, f);

  int flips = 0;
  for (;;) {
    int best = -1;
    double best_delta = -kDescentTol;
    for (int a = 0; a < n; ++a) {
      const double delta = q.get(a) ? -f[a] : f[a];
      if (delta < best_delta) {
        best_delta = delta;
        best = a;
      }
    }
    if (best < 0) break;
    const bool qa = q.get(best);
    q.flip(best);
    ++flips;
    const double step = qa ? -1.0 : 1.0;
    for (std::size_t e = c.row_begin[best]; e < c.row_begin[best + 1]; ++e)
      f[c.neighbor[e]] += c.weight[e] * step;
    // Periodic exact refresh keeps the cached fields from drifting on
    // very long descents.
    if ((flips & 1023) == 0) c.fields(q, f);
  }
  if (flips_applied) *flips_applied = flips;
  return q;
}

BitVec steepest_descent(const QuboProblem& q, const BitVec& start,
                        int* flips_applied) {
  if (static_cast<int>(start.size()) != q.n_vars())
    throw DomainError("start assignment length does not match the problem");
  return steepest_descent(compile_qubo(q), start, flips_applied);
}

double rayleigh_energy(std::span<const double> c, const CiHamiltonian& h) {
  const Eigen::Index n = h.dimension();
  if (static_cast<Eigen::Index>(c.size()) != n)
    throw DomainError("coefficient vector length does not match the "
                      "Hamiltonian");
  const Eigen::Map<const Eigen::VectorXd> v(c.data(),
                                            static_cast<Eigen::Index>(c.size()));
  const double norm2 = v.squaredNorm();
  if (norm2 == 0.0)
    throw DegenerateError("zero coefficient vector has no Rayleigh quotient");
  const double quad = v.dot(h.matrix * v);
  return quad / norm2 + h.scalar_offset;
}

}  // namespace qae
