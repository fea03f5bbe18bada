#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "qae/errors.hpp"

namespace qae {

/// Slater determinant as an occupation bitmask over spin orbitals.
/// Spin orbital 2p is the alpha component of spatial orbital p, 2p+1 the
/// beta component. The implicit ordering of creation operators is
/// ascending spin-orbital index.
struct Determinant {
  std::uint64_t mask = 0;

  bool occupied(int spin_orbital) const {
    return (mask >> spin_orbital) & 1u;
  }
  int n_electrons() const { return std::popcount(mask); }

  /// Occupied spin-orbital indices, ascending.
  std::vector<int> occupied_list() const;

  bool operator==(const Determinant& o) const { return mask == o.mask; }
  auto operator<=>(const Determinant& o) const { return mask <=> o.mask; }
};

/// Number of spin orbitals the two determinants differ in, divided by two
/// (0 = identical, 1 = single excitation, ...).
inline int excitation_degree(Determinant a, Determinant b) {
  return std::popcount(a.mask ^ b.mask) / 2;
}

/// Correlated subset of the orbital space.
struct ActiveSpace {
  int n_spin_orbitals = 0;
  int n_electrons = 0;
  std::string label;
};

/// Parse a label of the form "8o,3e": the orbital count is spatial and is
/// doubled into spin orbitals (so "14o,7e" spans C(28,7) determinants).
ActiveSpace parse_active_space(const std::string& label);

/// C(n_spin_orbitals, n_electrons) without generating the basis.
std::uint64_t fci_dimension(const ActiveSpace& space);

/// All determinants of the active space. The reference (Aufbau: lowest
/// n_electrons spin orbitals) comes first, the rest grouped by excitation
/// rank from the reference, ascending mask value within each rank.
/// Throws CapacityError if the dimension exceeds `cap`.
std::vector<Determinant> generate_fci_basis(const ActiveSpace& space,
                                            std::size_t cap = 4096);

}  // namespace qae
