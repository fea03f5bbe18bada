#include "qae/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <tuple>

namespace qae {

namespace {

inline std::uint64_t pair_key(int a, int b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

QuboProblem::QuboProblem(int n_vars) : n_vars_(n_vars), linear_(n_vars, 0.0) {
  if (n_vars < 0) throw ConfigError("negative variable count");
}

void QuboProblem::add_linear(int a, double w) {
  if (a < 0 || a >= n_vars_) throw IndexError("variable index out of range");
  linear_[a] += w;
}

void QuboProblem::add_quadratic(int a, int b, double w) {
  if (a < 0 || a >= n_vars_ || b < 0 || b >= n_vars_)
    throw IndexError("variable index out of range");
  if (a == b)
    throw DomainError("self-pair in quadratic term; fold q^2 = q into the "
                      "linear part");
  if (a > b) std::swap(a, b);
  quad_[pair_key(a, b)] += w;
}

double QuboProblem::quadratic(int a, int b) const {
  if (a > b) std::swap(a, b);
  const auto it = quad_.find(pair_key(a, b));
  return it == quad_.end() ? 0.0 : it->second;
}

double QuboProblem::energy(const BitVec& q) const {
  double e = offset_;
  for (int a = 0; a < n_vars_; ++a)
    if (q.get(a)) e += linear_[a];
  for (const auto& [key, w] : quad_) {
    const int a = static_cast<int>(key >> 32);
    const int b = static_cast<int>(key & 0xffffffffu);
    if (q.get(a) && q.get(b)) e += w;
  }
  return e;
}

double QuboProblem::max_abs_coefficient() const {
  double m = 0.0;
  for (double v : linear_) m = std::max(m, std::abs(v));
  for (const auto& [key, w] : quad_) m = std::max(m, std::abs(w));
  return m;
}

std::vector<std::tuple<int, int, double>> QuboProblem::sorted_entries() const {
  std::vector<std::tuple<int, int, double>> out;
  out.reserve(linear_.size() + quad_.size());
  for (int a = 0; a < n_vars_; ++a)
    if (linear_[a] != 0.0) out.emplace_back(a, a, linear_[a]);
  for (const auto& [key, w] : quad_) {
    if (w == 0.0) continue;
    out.emplace_back(static_cast<int>(key >> 32),
                     static_cast<int>(key & 0xffffffffu), w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void write_qubo(const QuboProblem& q, std::ostream& out) {
  out << "# n_vars " << q.n_vars() << "\n";
  if (q.offset() != 0.0) out << "# offset " << q.offset() << "\n";
  for (const auto& [a, b, w] : q.sorted_entries())
    out << a << ' ' << b << ' ' << w << '\n';
}

CompiledQubo compile_qubo(const QuboProblem& q) {
  CompiledQubo c;
  c.n = q.n_vars();
  c.offset = q.offset();
  c.linear = q.linear_terms();

  std::vector<std::size_t> degree(c.n, 0);
  for (const auto& [key, w] : q.quadratic_terms()) {
    (void)w;
    ++degree[static_cast<int>(key >> 32)];
    ++degree[static_cast<int>(key & 0xffffffffu)];
  }
  c.row_begin.assign(c.n + 1, 0);
  for (int a = 0; a < c.n; ++a) c.row_begin[a + 1] = c.row_begin[a] + degree[a];
  c.neighbor.resize(c.row_begin[c.n]);
  c.weight.resize(c.row_begin[c.n]);

  std::vector<std::size_t> cursor(c.row_begin.begin(), c.row_begin.end() - 1);
  // Deterministic layout: fill in sorted entry order.
  std::vector<std::pair<std::uint64_t, double>> entries(
      q.quadratic_terms().begin(), q.quadratic_terms().end());
  std::sort(entries.begin(), entries.end());
  for (const auto& [key, w] : entries) {
    const int a = static_cast<int>(key >> 32);
    const int b = static_cast<int>(key & 0xffffffffu);
    c.neighbor[cursor[a]] = b;
    c.weight[cursor[a]] = w;
    ++cursor[a];
    c.neighbor[cursor[b]] = a;
    c.weight[cursor[b]] = w;
    ++cursor[b];
  }
  return c;
}

double CompiledQubo::energy(const BitVec& q) const {
  double e = offset;
  for (int a = 0; a < n; ++a) {
    if (!q.get(a)) continue;
    e += linear[a];
    for (std::size_t k = row_begin[a]; k < row_begin[a + 1]; ++k) {
      const int b = neighbor[k];
      if (b > a && q.get(b)) e += weight[k];
    }
  }
  return e;
}

void CompiledQubo::fields(const BitVec& q, std::vector<double>& f) const {
  f.assign(linear.begin(), linear.end());
  for (int b = 0; b < n; ++b) {
    if (!q.get(b)) continue;
    for (std::size_t k = row_begin[b]; k < row_begin[b + 1]; ++k)
      f[neighbor[k]] += weight[k];
  }
}

double encoding_bit_weight(int b, int k_bits) {
  if (k_bits < 2) throw ConfigError("encoding needs at least 2 bits");
  if (b < 0 || b >= k_bits) throw IndexError("bit index out of range");
  if (b == k_bits - 1) return -1.0;
  return std::ldexp(1.0, b + 1 - k_bits);
}

double decode_coefficient(std::span<const int> bits) {
  const int k = static_cast<int>(bits.size());
  double c = 0.0;
  for (int b = 0; b < k; ++b)
    if (bits[b]) c += encoding_bit_weight(b, k);
  return c;
}

std::vector<double> decode_coefficients(const BitVec& q, int n_coeffs,
                                        int k_bits) {
  std::vector<double> c(n_coeffs, 0.0);
  for (int i = 0; i < n_coeffs; ++i)
    for (int b = 0; b < k_bits; ++b)
      if (q.get(static_cast<std::size_t>(i) * k_bits + b))
        c[i] += encoding_bit_weight(b, k_bits);
  return c;
}

namespace {

void check_symmetric(const Eigen::MatrixXd& h) {
  if (h.rows() != h.cols()) throw DomainError("matrix is not square");
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    for (Eigen::Index j = i + 1; j < h.cols(); ++j)
      if (std::abs(h(i, j) - h(j, i)) > 1e-10)
        throw DomainError("matrix is not symmetric within 1e-10");
}

// Shared core of build_qubo/partition: expand the functional over the
// sub-block of `h` given by `coeffs`, with lambda on its diagonal.
QuboProblem expand_block(const Eigen::MatrixXd& h, double lambda,
                         int k_bits, std::span<const int> coeffs) {
  const int g = static_cast<int>(coeffs.size());
  QuboProblem q(g * k_bits);

  std::vector<double> u(k_bits);
  for (int b = 0; b < k_bits; ++b) u[b] = encoding_bit_weight(b, k_bits);

  for (int li = 0; li < g; ++li) {
    const double a_ii = h(coeffs[li], coeffs[li]) - lambda;
    for (int b = 0; b < k_bits; ++b) {
      // q^2 = q: the b == b' diagonal of the bilinear expansion is linear.
      q.add_linear(li * k_bits + b, a_ii * u[b] * u[b]);
      for (int b2 = b + 1; b2 < k_bits; ++b2)
        q.add_quadratic(li * k_bits + b, li * k_bits + b2,
                        2.0 * a_ii * u[b] * u[b2]);
    }
    for (int lj = li + 1; lj < g; ++lj) {
      const double a_ij = h(coeffs[li], coeffs[lj]);
      if (a_ij == 0.0) continue;
      for (int b = 0; b < k_bits; ++b)
        for (int b2 = 0; b2 < k_bits; ++b2)
          q.add_quadratic(li * k_bits + b, lj * k_bits + b2,
                          2.0 * a_ij * u[b] * u[b2]);
    }
  }
  return q;
}

}  // namespace

QuboProblem build_qubo(const Eigen::MatrixXd& h, double lambda,
                       const EncodingConfig& cfg) {
  check_symmetric(h);
  std::vector<int> all(static_cast<std::size_t>(h.rows()));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return expand_block(h, lambda, cfg.k_bits, all);
}

std::vector<SubQubo> partition_sub_qubos(const Eigen::MatrixXd& h,
                                         double lambda,
                                         const EncodingConfig& cfg,
                                         std::span<const int> order,
                                         int max_vars) {
  check_symmetric(h);
  if (max_vars < cfg.k_bits)
    throw ConfigError("max sub-problem size is below one encoded "
                      "coefficient (" +
                      std::to_string(cfg.k_bits) + " bits)");
  const int n = static_cast<int>(h.rows());
  if (static_cast<int>(order.size()) != n)
    throw ConfigError("order must be a permutation of the coefficient "
                      "indices");

  const int group_size = max_vars / cfg.k_bits;
  std::vector<SubQubo> subs;
  for (int start = 0; start < n; start += group_size) {
    const int end = std::min(n, start + group_size);
    SubQubo sub;
    sub.parent_coeff_indices.assign(order.begin() + start,
                                    order.begin() + end);
    sub.problem = expand_block(h, lambda, cfg.k_bits,
                               std::span<const int>(sub.parent_coeff_indices));
    sub.var_map.reserve(sub.parent_coeff_indices.size() *
                        static_cast<std::size_t>(cfg.k_bits));
    for (int idx : sub.parent_coeff_indices)
      for (int b = 0; b < cfg.k_bits; ++b) sub.var_map.emplace_back(idx, b);
    subs.push_back(std::move(sub));
  }
  return subs;
}

void scatter_sub_assignment(const SubQubo& sub, const BitVec& local,
                            int k_bits, BitVec& full) {
  for (std::size_t v = 0; v < sub.var_map.size(); ++v) {
    const auto [coeff, bit] = sub.var_map[v];
    full.set(static_cast<std::size_t>(coeff) * k_bits + bit, local.get(v));
  }
}

}  // namespace qae
