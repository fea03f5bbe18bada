#include "qae/determinant.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qae {

std::vector<int> Determinant::occupied_list() const {
  std::vector<int> occ;
  occ.reserve(static_cast<std::size_t>(n_electrons()));
  std::uint64_t m = mask;
  while (m) {
    occ.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return occ;
}

ActiveSpace parse_active_space(const std::string& label) {
  // Accepted form: "<orbitals>o,<electrons>e" with optional spaces.
  std::string s;
  for (char c : label)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  const auto comma = s.find(',');
  if (comma == std::string::npos || s.size() < 4)
    throw ParseError("active space label must look like \"8o,3e\": " + label);
  const std::string orb = s.substr(0, comma);
  const std::string ele = s.substr(comma + 1);
  if (orb.empty() || orb.back() != 'o' || ele.empty() || ele.back() != 'e')
    throw ParseError("active space label must look like \"8o,3e\": " + label);
  int n_orb = 0, n_ele = 0;
  try {
    n_orb = std::stoi(orb.substr(0, orb.size() - 1));
    n_ele = std::stoi(ele.substr(0, ele.size() - 1));
  } catch (const std::exception&) {
    throw ParseError("active space label must look like \"8o,3e\": " + label);
  }
  if (n_orb <= 0 || n_orb > 32)
    throw ConfigError("active space orbital count outside [1, 32]");
  ActiveSpace space;
  space.n_spin_orbitals = 2 * n_orb;
  space.n_electrons = n_ele;
  space.label = label;
  if (space.n_electrons < 0 || space.n_electrons > space.n_spin_orbitals)
    throw ConfigError("active space has more electrons than spin orbitals");
  return space;
}

std::uint64_t fci_dimension(const ActiveSpace& space) {
  const int n = space.n_spin_orbitals;
  const int k = space.n_electrons;
  if (k < 0 || k > n)
    throw ConfigError("electron count outside [0, n_spin_orbitals]");
  // C(n, k) with overflow-safe interleaved divide.
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

std::vector<Determinant> generate_fci_basis(const ActiveSpace& space,
                                            std::size_t cap) {
  const int n = space.n_spin_orbitals;
  const int k = space.n_electrons;
  if (n <= 0 || n > 64) throw ConfigError("spin orbital count outside [1, 64]");
  if (k < 0 || k > n)
    throw ConfigError("electron count outside [0, n_spin_orbitals]");

  const std::uint64_t dim = fci_dimension(space);
  if (dim > cap)
    throw CapacityError("FCI dimension " + std::to_string(dim) +
                        " exceeds cap " + std::to_string(cap));

  std::vector<Determinant> basis;
  basis.reserve(dim);
  if (k == 0) {
    basis.push_back({0});
    return basis;
  }

  const std::uint64_t reference = (k == 64) ? ~std::uint64_t{0}
                                            : ((std::uint64_t{1} << k) - 1);
  // Gosper's hack enumerates all k-subsets in ascending mask order.
  std::uint64_t m = reference;
  const std::uint64_t limit =
      (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  while (m < limit) {
    basis.push_back({m});
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    const std::uint64_t next = (((r ^ m) >> 2) / c) | r;
    if (next <= m) break;  // wrapped
    m = next;
  }

  // Ascending-mask order is preserved inside each rank group.
  std::stable_sort(basis.begin(), basis.end(),
                   [reference](const Determinant& a, const Determinant& b) {
                     return std::popcount(a.mask ^ reference) <
                            std::popcount(b.mask ^ reference);
                   });
  return basis;
}

}  // namespace qae
