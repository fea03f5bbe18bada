#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "qae/errors.hpp"

namespace qae {

/// One- and two-electron integrals over spatial orbitals, plus the scalar
/// core energy (nuclear repulsion and any frozen-core contribution).
///
/// Storage is sparse with canonical keys, so every symmetry-equivalent
/// index permutation resolves to the same entry:
///   one-body   h_pq = h_qp
///   two-body   (pq|rs) = (qp|rs) = (pq|sr) = (rs|pq) = ... (8-fold, real)
///
/// Two-electron integrals use chemist notation (pq|rs). Orbital indices
/// are 0-based everywhere in this API; the FCIDUMP text format is 1-based
/// and the parser shifts at the boundary.
///
/// Immutable once built; safe for shared concurrent reads.
class IntegralSet {
 public:
  int n_spatial_orbitals = 0;
  int n_electrons = 0;
  double core_energy = 0.0;
  bool spin_restricted = true;

  double one_body(int p, int q) const;
  double two_body(int p, int q, int r, int s) const;

  void set_one_body(int p, int q, double value);
  void set_two_body(int p, int q, int r, int s, double value);

  /// Stored unique entries, canonical-key order. Used for serialization.
  const std::map<std::uint64_t, double>& one_body_entries() const {
    return h_;
  }
  const std::map<std::uint64_t, double>& two_body_entries() const {
    return g_;
  }

  std::size_t n_spin_orbitals() const {
    return 2 * static_cast<std::size_t>(n_spatial_orbitals);
  }

  static std::uint64_t one_body_key(int p, int q);
  static std::uint64_t two_body_key(int p, int q, int r, int s);

 private:
  void check_index(int i) const;

  std::map<std::uint64_t, double> h_;
  std::map<std::uint64_t, double> g_;
};

/// Parse FCIDUMP-style text: a namelist header declaring NORB and NELEC,
/// terminated by `&END` or `/`, followed by `value i j k l` lines.
///   value 0 0 0 0  -> core energy
///   value i j 0 0  -> h_ij
///   value i j k l  -> (ij|kl)
/// Throws ParseError (bad header/line, with line number), IndexError
/// (orbital index out of [1, NORB]), ConflictError (duplicate entry
/// disagreeing by more than 1e-10).
IntegralSet parse_fcidump(std::istream& in);
IntegralSet parse_fcidump_file(const std::string& path);

/// Canonical text form; parse(write(x)) reproduces x exactly.
void write_fcidump(const IntegralSet& ints, std::ostream& out);

}  // namespace qae
