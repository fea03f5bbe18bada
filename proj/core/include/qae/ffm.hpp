#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qae {

/// 1 atomic unit of electric dipole moment in debye.
inline constexpr double kAuToDebye = 2.541746473;
/// 1 angstrom in bohr.
inline constexpr double kAngstromToBohr = 1.8897259886;

/// Field-dependent ground-state energies around zero field.
struct FfmInput {
  double e_plus = 0.0;   // hartree at +epsilon
  double e_minus = 0.0;  // hartree at -epsilon
  double epsilon = 1e-3; // field strength, atomic units
};

/// Linear arrangement of nuclei along z.
struct Atom {
  int charge = 0;     // atomic number Z
  double z_bohr = 0.0;
};
struct Geometry {
  std::vector<Atom> atoms;
};

/// Geometry text format: one `Z z_angstrom` line per atom.
Geometry parse_geometry(std::istream& in);
Geometry parse_geometry_file(const std::string& path);

struct DipoleResult {
  double electronic_slope = 0.0;  // dE/d(epsilon), a.u.
  double nuclear_term = 0.0;      // sum Z_A R_A, a.u.
  double pdm_au = 0.0;
  double pdm_debye = 0.0;
};

/// (E(+eps) - E(-eps)) / (2 eps); exact for energies quadratic in the
/// field. Throws DomainError when epsilon is zero.
double central_difference(const FfmInput& input);

/// sum_A Z_A * R_A about the caller's origin.
double nuclear_dipole_z(const Geometry& g);

/// Combine the electronic response with the nuclear term. By default the
/// magnitude |nuclear - electronic| is reported; both signed pieces stay
/// visible in the result so the convention can be audited. With
/// keep_sign the raw difference is returned instead.
DipoleResult assemble_pdm(const FfmInput& input, const Geometry& g,
                          bool keep_sign = false);

}  // namespace qae
