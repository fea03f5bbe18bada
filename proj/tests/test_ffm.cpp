#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qae/ffm.hpp"
#include "qae/errors.hpp"
#include "test_util.hpp"

using namespace qae;

TEST_CASE("central difference: linear energy model") {
  // E(eps) = -1 - 1.0 * eps sampled at +-1e-3
  FfmInput in;
  in.epsilon = 1e-3;
  in.e_plus = -1.0 - 1.0 * in.epsilon;
  in.e_minus = -1.0 + 1.0 * in.epsilon;
  CHECK(testutil::approx_abs(central_difference(in), -1.0, 1e-12));
}

TEST_CASE("central difference: quadratic terms cancel exactly") {
  for (double alpha : {0.0, 5.0, 1e3}) {
    const double e0 = -2.0, mu = 0.731, eps = 1e-3;
    FfmInput in;
    in.epsilon = eps;
    in.e_plus = e0 - mu * eps + alpha * eps * eps;
    in.e_minus = e0 + mu * eps + alpha * eps * eps;
    CHECK(testutil::approx_abs(central_difference(in), -mu, 1e-12));
  }
}

TEST_CASE("central difference: zero step") {
  FfmInput in;
  in.epsilon = 0.0;
  CHECK_THROWS_AS(central_difference(in), DomainError);
}

TEST_CASE("nuclear dipole") {
  SUBCASE("single atom at the origin") {
    Geometry g{{{9, 0.0}}};
    CHECK(nuclear_dipole_z(g) == 0.0);
  }
  SUBCASE("two atoms") {
    Geometry g{{{9, 0.0}, {56, 2.16 * kAngstromToBohr}}};
    CHECK(nuclear_dipole_z(g) ==
          doctest::Approx(56.0 * 2.16 * kAngstromToBohr).epsilon(1e-14));
  }
  SUBCASE("translation shifts by d * sum(Z)") {
    Geometry g{{{4, 0.5}, {9, -1.2}}};
    const double base = nuclear_dipole_z(g);
    const double d = 0.37;
    for (auto& a : g.atoms) a.z_bohr += d;
    CHECK(nuclear_dipole_z(g) ==
          doctest::Approx(base + d * 13.0).epsilon(1e-12));
  }
}

TEST_CASE("geometry parsing") {
  std::istringstream in("9 0.0\n56 2.16\n");
  const Geometry g = parse_geometry(in);
  REQUIRE(g.atoms.size() == 2);
  CHECK(g.atoms[0].charge == 9);
  CHECK(g.atoms[0].z_bohr == 0.0);
  CHECK(g.atoms[1].z_bohr == doctest::Approx(2.16 * kAngstromToBohr));

  std::istringstream bad("9\n");
  CHECK_THROWS_AS(parse_geometry(bad), ParseError);
  std::istringstream none("");
  CHECK_THROWS_AS(parse_geometry(none), ParseError);
}

TEST_CASE("dipole assembly from the published field energies") {
  // BaF, smallest heavy-atom basis: fluorine at the origin, barium at
  // 2.16 angstrom, with the tabulated field-dependent FCI energies.
  FfmInput in;
  in.epsilon = 1e-3;
  in.e_minus = -8235.802103;
  in.e_plus = -8235.346769;
  CHECK(central_difference(in) == doctest::Approx(227.667).epsilon(1e-9));

  Geometry g{{{9, 0.0}, {56, 2.16 * kAngstromToBohr}}};
  const DipoleResult r = assemble_pdm(in, g);
  CHECK(r.nuclear_term == doctest::Approx(228.581256).epsilon(1e-6));
  CHECK(r.pdm_au == doctest::Approx(r.nuclear_term - r.electronic_slope));
  CHECK(std::abs(r.pdm_debye - 2.323) <= 0.02);
  CHECK(r.pdm_debye == r.pdm_au * kAuToDebye);
}

TEST_CASE("dipole assembly conventions") {
  SUBCASE("zero response leaves the bare nuclear term") {
    FfmInput in;
    in.epsilon = 1e-3;
    in.e_plus = -1.0;
    in.e_minus = -1.0;
    Geometry g{{{1, 0.0}, {1, 1.0}}};
    const DipoleResult r = assemble_pdm(in, g);
    CHECK(r.electronic_slope == 0.0);
    CHECK(r.pdm_au == doctest::Approx(std::abs(r.nuclear_term)));
  }
  SUBCASE("linear toy with no nuclei") {
    const double mu = 0.42;
    FfmInput in;
    in.epsilon = 1e-3;
    in.e_plus = -mu * in.epsilon;
    in.e_minus = mu * in.epsilon;
    const DipoleResult r = assemble_pdm(in, Geometry{});
    CHECK(r.pdm_au == doctest::Approx(mu).epsilon(1e-12));
  }
  SUBCASE("keep_sign exposes the raw difference") {
    FfmInput in;
    in.epsilon = 1e-3;
    in.e_plus = -1.0 + 5e-3;  // slope +5, nuclear 0 -> signed pdm -5
    in.e_minus = -1.0 - 5e-3;
    const DipoleResult r = assemble_pdm(in, Geometry{}, true);
    CHECK(r.pdm_au == doctest::Approx(-5.0));
  }
  SUBCASE("scale invariance for a linear response") {
    const double mu = 1.7;
    for (double eps : {1e-4, 1e-3, 1e-2}) {
      FfmInput in;
      in.epsilon = eps;
      in.e_plus = -mu * eps;
      in.e_minus = mu * eps;
      CHECK(assemble_pdm(in, Geometry{}).pdm_au ==
            doctest::Approx(mu).epsilon(1e-12));
    }
  }
}

TEST_CASE("debye conversion round-trips") {
  const double au = 0.913858;
  const double debye = au * kAuToDebye;
  CHECK(debye / kAuToDebye == doctest::Approx(au).epsilon(1e-12));
}
