#include "qae/ci.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace qae {

double OneBodyOperator::get(int p, int q) const {
  const auto it = entries_.find(IntegralSet::one_body_key(p, q));
  return it == entries_.end() ? 0.0 : it->second;
}

void OneBodyOperator::set(int p, int q, double value) {
  if (p < 0 || q < 0) throw IndexError("negative orbital index");
  entries_[IntegralSet::one_body_key(p, q)] = value;
}

OneBodyOperator parse_one_body_operator(std::istream& in) {
  OneBodyOperator op;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    double value;
    int p, q;
    if (!(ls >> value)) continue;
    if (!(ls >> p >> q))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected `value p q`");
    if (p < 1 || q < 1)
      throw IndexError("line " + std::to_string(line_no) +
                       ": orbital indices are 1-based");
    op.set(p - 1, q - 1, value);
  }
  return op;
}

OneBodyOperator parse_one_body_operator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open operator file: " + path);
  return parse_one_body_operator(in);
}

namespace {

// Parity sign of applying a creation/annihilation operator at `orbital`:
// (-1)^(number of occupied spin orbitals below it).
inline int jordan_wigner_sign(std::uint64_t mask, int orbital) {
  const std::uint64_t below = mask & ((std::uint64_t{1} << orbital) - 1);
  return (std::popcount(below) & 1) ? -1 : 1;
}

inline int spin_of(int so) { return so & 1; }
inline int spatial_of(int so) { return so >> 1; }

// Spin-orbital one-body element; diagonal in spin.
inline double h_so(const IntegralSet& ints, int s, int t) {
  if (spin_of(s) != spin_of(t)) return 0.0;
  return ints.one_body(spatial_of(s), spatial_of(t));
}

// Physicist-notation spin-orbital integral <st|uv>: electron 1 in (s,u),
// electron 2 in (t,v); reduces to the chemist spatial element (SU|TV).
inline double phys_so(const IntegralSet& ints, int s, int t, int u, int v) {
  if (spin_of(s) != spin_of(u) || spin_of(t) != spin_of(v)) return 0.0;
  return ints.two_body(spatial_of(s), spatial_of(u), spatial_of(t),
                       spatial_of(v));
}

inline double anti_so(const IntegralSet& ints, int s, int t, int u, int v) {
  return phys_so(ints, s, t, u, v) - phys_so(ints, s, t, v, u);
}

}  // namespace

double slater_condon_element(Determinant a, Determinant b,
                             const IntegralSet& ints) {
  if (a.n_electrons() != b.n_electrons())
    throw DomainError("determinants have different electron counts");
  const std::uint64_t space_mask =
      (ints.n_spin_orbitals() >= 64)
          ? ~std::uint64_t{0}
          : ((std::uint64_t{1} << ints.n_spin_orbitals()) - 1);
  if ((a.mask | b.mask) & ~space_mask)
    throw IndexError("determinant occupies a spin orbital outside the "
                     "integral set");

  const int degree = excitation_degree(a, b);
  if (degree > 2) return 0.0;

  if (degree == 0) {
    const auto occ = a.occupied_list();
    double e = 0.0;
    for (int i : occ) e += h_so(ints, i, i);
    for (int i : occ)
      for (int j : occ) e += 0.5 * anti_so(ints, i, j, i, j);
    return e;
  }

  if (degree == 1) {
    const int m = std::countr_zero(a.mask & ~b.mask);  // only in a
    const int p = std::countr_zero(b.mask & ~a.mask);  // only in b
    const std::uint64_t common = a.mask & b.mask;
    const int phase = jordan_wigner_sign(b.mask, p) *
                      jordan_wigner_sign(b.mask & ~(std::uint64_t{1} << p), m);
    double e = h_so(ints, m, p);
    std::uint64_t rest = common;
    while (rest) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      e += anti_so(ints, m, i, p, i);
    }
    return phase * e;
  }

  // Double excitation: {m1 < m2} only in a, {p1 < p2} only in b.
  std::uint64_t am = a.mask & ~b.mask;
  const int m1 = std::countr_zero(am);
  am &= am - 1;
  const int m2 = std::countr_zero(am);
  std::uint64_t bm = b.mask & ~a.mask;
  const int p1 = std::countr_zero(bm);
  bm &= bm - 1;
  const int p2 = std::countr_zero(bm);

  // Phase of <a| a+_m1 a+_m2 a_p2 a_p1 |b>, applied right to left.
  std::uint64_t state = b.mask;
  int phase = jordan_wigner_sign(state, p1);
  state &= ~(std::uint64_t{1} << p1);
  phase *= jordan_wigner_sign(state, p2);
  state &= ~(std::uint64_t{1} << p2);
  phase *= jordan_wigner_sign(state, m2);
  state |= std::uint64_t{1} << m2;
  phase *= jordan_wigner_sign(state, m1);

  return phase * anti_so(ints, m1, m2, p1, p2);
}

CiHamiltonian assemble_hamiltonian(const std::vector<Determinant>& basis,
                                   const IntegralSet& ints,
                                   const FieldSpec* field) {
  if (basis.empty()) throw DomainError("empty determinant basis");

  const IntegralSet* effective = &ints;
  IntegralSet perturbed;
  if (field && field->epsilon != 0.0) {
    if (!field->dipole_integrals)
      throw ConfigError("field strength is nonzero but no dipole integrals "
                        "were supplied");
    perturbed = ints;
    const OneBodyOperator& op = *field->dipole_integrals;
    for (int p = 0; p < ints.n_spatial_orbitals; ++p)
      for (int q = 0; q <= p; ++q) {
        const double o = op.get(p, q);
        if (o != 0.0)
          perturbed.set_one_body(
              p, q, perturbed.one_body(p, q) + field->epsilon * o);
      }
    effective = &perturbed;
  }

  CiHamiltonian h;
  h.basis = basis;
  h.scalar_offset = ints.core_energy;
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  h.matrix.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double e = slater_condon_element(basis[i], basis[j], *effective);
      h.matrix(i, j) = e;
      h.matrix(j, i) = e;
    }
  }
  return h;
}

PerturbativeEstimates perturbative_coefficients(const CiHamiltonian& h) {
  const Eigen::Index n = h.dimension();
  if (n < 1) throw DomainError("empty Hamiltonian");
  PerturbativeEstimates est;
  est.values.resize(n);
  est.values[0] = 1.0;
  constexpr double kDenomFloor = 1e-8;
  for (Eigen::Index i = 1; i < n; ++i) {
    double denom = h.matrix(0, 0) - h.matrix(i, i);
    if (std::abs(denom) < kDenomFloor) {
      denom = std::copysign(kDenomFloor, denom);
      est.clamped.push_back(static_cast<int>(i));
    }
    est.values[i] = h.matrix(i, 0) / denom;
  }
  return est;
}

std::vector<int> perturbative_order(const CiHamiltonian& h) {
  const auto est = perturbative_coefficients(h);
  std::vector<int> order(est.values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin() + 1, order.end(), [&](int x, int y) {
    const double ax = std::abs(est.values[x]);
    const double ay = std::abs(est.values[y]);
    if (ax != ay) return ax > ay;
    return x < y;
  });
  return order;
}

CiHamiltonian select_determinants(const CiHamiltonian& h, std::size_t n_keep) {
  const auto n = static_cast<std::size_t>(h.dimension());
  if (n_keep < 1 || n_keep > n)
    throw DomainError("n_keep outside [1, " + std::to_string(n) + "]");

  auto order = perturbative_order(h);
  order.resize(n_keep);

  CiHamiltonian out;
  out.scalar_offset = h.scalar_offset;
  if (!h.basis.empty()) {
    out.basis.reserve(n_keep);
    for (int idx : order) out.basis.push_back(h.basis[idx]);
  }
  const Eigen::Index m = static_cast<Eigen::Index>(n_keep);
  out.matrix.resize(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      out.matrix(i, j) = h.matrix(order[i], order[j]);
  return out;
}

}  // namespace qae
