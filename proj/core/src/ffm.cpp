#include "qae/ffm.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qae/errors.hpp"

namespace qae {

Geometry parse_geometry(std::istream& in) {
  Geometry g;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    int z;
    double coord;
    if (!(ls >> z)) continue;
    if (!(ls >> coord))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected `Z z_angstrom`");
    if (z <= 0)
      throw ParseError("line " + std::to_string(line_no) +
                       ": nuclear charge must be a positive integer");
    g.atoms.push_back({z, coord * kAngstromToBohr});
  }
  if (g.atoms.empty()) throw ParseError("geometry has no atoms");
  return g;
}

Geometry parse_geometry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open geometry file: " + path);
  return parse_geometry(in);
}

double central_difference(const FfmInput& input) {
  if (input.epsilon == 0.0)
    throw DomainError("central difference needs a nonzero field step");
  return (input.e_plus - input.e_minus) / (2.0 * input.epsilon);
}

double nuclear_dipole_z(const Geometry& g) {
  double d = 0.0;
  for (const Atom& a : g.atoms) d += a.charge * a.z_bohr;
  return d;
}

DipoleResult assemble_pdm(const FfmInput& input, const Geometry& g,
                          bool keep_sign) {
  DipoleResult r;
  r.electronic_slope = central_difference(input);
  r.nuclear_term = nuclear_dipole_z(g);
  const double signed_pdm = r.nuclear_term - r.electronic_slope;
  r.pdm_au = keep_sign ? signed_pdm : std::abs(signed_pdm);
  r.pdm_debye = r.pdm_au * kAuToDebye;
  return r;
}

}  // namespace qae
