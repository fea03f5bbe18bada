#include <doctest.h>

#include <random>

#include "qae/ci.hpp"
#include "qae/oracle.hpp"
#include "test_util.hpp"

using namespace qae;

TEST_CASE("active space labels") {
  const ActiveSpace a = parse_active_space("8o,3e");
  CHECK(a.n_spin_orbitals == 16);
  CHECK(a.n_electrons == 3);
  const ActiveSpace b = parse_active_space(" 14o , 7e ");
  CHECK(b.n_spin_orbitals == 28);
  CHECK(b.n_electrons == 7);
  CHECK_THROWS_AS(parse_active_space("8,3"), ParseError);
}

TEST_CASE("basis sizes") {
  CHECK(generate_fci_basis({2, 1, ""}).size() == 2);
  CHECK(generate_fci_basis({4, 2, ""}).size() == 6);
  // (14 spatial orbitals -> 28 spin orbitals, 7 electrons)
  CHECK(fci_dimension(parse_active_space("14o,7e")) == 1184040);
  CHECK_THROWS_AS(generate_fci_basis(parse_active_space("14o,7e")),
                  CapacityError);
}

TEST_CASE("basis order: reference first, rank groups, ascending masks") {
  const auto basis = generate_fci_basis({4, 2, ""});
  REQUIRE(basis.size() == 6);
  CHECK(basis[0].mask == 0b0011);
  CHECK(basis[1].mask == 0b0101);
  CHECK(basis[2].mask == 0b0110);
  CHECK(basis[3].mask == 0b1001);
  CHECK(basis[4].mask == 0b1010);
  CHECK(basis[5].mask == 0b1100);
  for (const auto& d : basis) CHECK(d.n_electrons() == 2);
}

TEST_CASE("slater-condon: zero beyond double excitations") {
  IntegralSet ints = [] {
    std::mt19937_64 rng(5);
    return testutil::random_integrals(3, rng);
  }();
  const Determinant a{0b000111};
  const Determinant b{0b111000};
  CHECK(slater_condon_element(a, b, ints) == 0.0);
}

TEST_CASE("slater-condon: electron count mismatch") {
  IntegralSet ints;
  ints.n_spatial_orbitals = 2;
  CHECK_THROWS_AS(
      slater_condon_element(Determinant{0b01}, Determinant{0b11}, ints),
      DomainError);
}

TEST_CASE("slater-condon: diagonal rule matches the explicit sums") {
  std::mt19937_64 rng(11);
  const IntegralSet ints = testutil::random_integrals(3, rng);
  const Determinant d{0b010011};  // spin orbitals 0, 1, 4
  const auto occ = d.occupied_list();

  double expected = 0.0;
  for (int i : occ) expected += ints.one_body(i / 2, i / 2);
  for (int i : occ)
    for (int j : occ) {
      if (i == j) continue;
      const double coulomb = ints.two_body(i / 2, i / 2, j / 2, j / 2);
      const double exchange =
          (i % 2 == j % 2) ? ints.two_body(i / 2, j / 2, j / 2, i / 2) : 0.0;
      expected += 0.5 * (coulomb - exchange);
    }
  CHECK(slater_condon_element(d, d, ints) ==
        doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("slater-condon: phase flips when the excitation crosses an "
          "occupied orbital") {
  IntegralSet ints;
  ints.n_spatial_orbitals = 2;
  ints.set_one_body(0, 1, 0.37);

  // 0 -> 2 with spin orbital 1 occupied in between:
  const double crossing = slater_condon_element(Determinant{0b0011},
                                                Determinant{0b0110}, ints);
  // 0 -> 2 with the shared electron out of the way (orbital 3):
  const double clear = slater_condon_element(Determinant{0b1001},
                                             Determinant{0b1100}, ints);
  CHECK(crossing == -0.37);
  CHECK(clear == 0.37);
}

TEST_CASE("oracle equivalence: assembled matrix equals brute-force operator "
          "application") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int n_spatial = 2 + static_cast<int>(rng() % 3);  // 4..8 spin orbs
    const int n_so = 2 * n_spatial;
    const int n_elec = 1 + static_cast<int>(rng() % (n_so - 1));
    const IntegralSet ints = testutil::random_integrals(n_spatial, rng);
    const ActiveSpace space{n_so, n_elec, ""};

    const auto basis = generate_fci_basis(space);
    const CiHamiltonian h = assemble_hamiltonian(basis, ints);
    const Eigen::MatrixXd ref = oracle::brute_force_hamiltonian(ints, basis);

    REQUIRE(h.matrix.rows() == ref.rows());
    const double max_diff = (h.matrix - ref).cwiseAbs().maxCoeff();
    CHECK(max_diff <= 1e-12);
  }
}

TEST_CASE("slater-condon symmetry: <a|H|b> == <b|H|a>") {
  std::mt19937_64 rng(31);
  const IntegralSet ints = testutil::random_integrals(4, rng);
  const auto basis = generate_fci_basis({8, 3, ""}, 100);
  for (std::size_t i = 0; i < basis.size(); i += 7)
    for (std::size_t j = 0; j < basis.size(); j += 5) {
      const double ab = slater_condon_element(basis[i], basis[j], ints);
      const double ba = slater_condon_element(basis[j], basis[i], ints);
      CHECK(testutil::approx_abs(ab, ba, 1e-12));
    }
}

TEST_CASE("field perturbation") {
  std::mt19937_64 rng(8);
  const IntegralSet ints = testutil::random_integrals(3, rng);
  const auto basis = generate_fci_basis({6, 3, ""});

  OneBodyOperator dipole;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q <= p; ++q)
      dipole.set(p, q, testutil::uniform_pm1(rng));

  SUBCASE("epsilon = 0 reproduces the unperturbed assembly") {
    FieldSpec field{0.0, dipole};
    const CiHamiltonian h0 = assemble_hamiltonian(basis, ints);
    const CiHamiltonian hf = assemble_hamiltonian(basis, ints, &field);
    CHECK((h0.matrix - hf.matrix).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("the field enters linearly: H(+e) + H(-e) == 2 H(0)") {
    FieldSpec plus{1e-3, dipole};
    FieldSpec minus{-1e-3, dipole};
    const CiHamiltonian h0 = assemble_hamiltonian(basis, ints);
    const CiHamiltonian hp = assemble_hamiltonian(basis, ints, &plus);
    const CiHamiltonian hm = assemble_hamiltonian(basis, ints, &minus);
    const double max_diff =
        (hp.matrix + hm.matrix - 2.0 * h0.matrix).cwiseAbs().maxCoeff();
    CHECK(max_diff <= 1e-12);
  }

  SUBCASE("missing dipole integrals with a live field") {
    FieldSpec bad{1e-3, std::nullopt};
    CHECK_THROWS_AS(assemble_hamiltonian(basis, ints, &bad), ConfigError);
  }
}

TEST_CASE("field perturbation: diagonal operator shifts one diagonal "
          "element") {
  IntegralSet ints;
  ints.n_spatial_orbitals = 2;
  ints.set_one_body(0, 0, -1.0);
  ints.set_one_body(1, 1, -0.5);

  OneBodyOperator dipole;
  dipole.set(1, 1, 1.0);
  FieldSpec field{1e-3, dipole};

  // Two determinants: one electron in spatial orbital 0 or 1 (both alpha).
  const std::vector<Determinant> basis{{0b0001}, {0b0100}};
  const CiHamiltonian h0 = assemble_hamiltonian(basis, ints);
  const CiHamiltonian hf = assemble_hamiltonian(basis, ints, &field);
  CHECK(hf.matrix(0, 0) == h0.matrix(0, 0));
  CHECK(hf.matrix(1, 1) ==
        doctest::Approx(h0.matrix(1, 1) + 1e-3).epsilon(1e-15));
}

TEST_CASE("perturbative coefficients") {
  SUBCASE("diagonal matrix gives the bare reference") {
    CiHamiltonian h;
    h.matrix = Eigen::MatrixXd::Zero(3, 3);
    h.matrix.diagonal() << -1.0, 1.0, 2.0;
    const auto est = perturbative_coefficients(h);
    CHECK(est.values[0] == 1.0);
    CHECK(est.values[1] == 0.0);
    CHECK(est.values[2] == 0.0);
    CHECK(est.clamped.empty());
  }
  SUBCASE("direct formula") {
    CiHamiltonian h;
    h.matrix.resize(2, 2);
    h.matrix << 0.0, 0.1, 0.1, 1.0;
    const auto est = perturbative_coefficients(h);
    CHECK(est.values[1] == doctest::Approx(-0.1).epsilon(1e-14));
  }
  SUBCASE("degenerate denominator is clamped and flagged") {
    CiHamiltonian h;
    h.matrix.resize(2, 2);
    h.matrix << 1.0, 0.2, 0.2, 1.0;
    const auto est = perturbative_coefficients(h);
    CHECK(std::abs(est.values[1]) == doctest::Approx(0.2 / 1e-8));
    REQUIRE(est.clamped.size() == 1);
    CHECK(est.clamped[0] == 1);
  }
}

TEST_CASE("determinant selection") {
  std::mt19937_64 rng(17);
  CiHamiltonian h;
  h.matrix = testutil::random_symmetric(10, rng);

  SUBCASE("n_keep = 1 leaves the bare reference") {
    const CiHamiltonian s = select_determinants(h, 1);
    CHECK(s.dimension() == 1);
    CHECK(s.matrix(0, 0) == h.matrix(0, 0));
  }
  SUBCASE("n_keep = N permutes without changing the spectrum") {
    const CiHamiltonian s = select_determinants(h, 10);
    const auto full = oracle::full_spectrum(h.matrix).eigenvalues;
    const auto perm = oracle::full_spectrum(s.matrix).eigenvalues;
    for (std::size_t i = 0; i < full.size(); ++i)
      CHECK(testutil::approx_abs(perm[i], full[i], 1e-10));
    // Reference stays first.
    CHECK(s.matrix(0, 0) == h.matrix(0, 0));
  }
  SUBCASE("selection is variational") {
    for (int trial = 0; trial < 10; ++trial) {
      CiHamiltonian g;
      g.matrix = testutil::random_symmetric(10, rng);
      const double full = oracle::exact_ground(g).first;
      const double sel =
          oracle::exact_ground(select_determinants(g, 4)).first;
      CHECK(sel >= full - 1e-12);
    }
  }
  SUBCASE("n_keep bounds") {
    CHECK_THROWS_AS(select_determinants(h, 0), DomainError);
    CHECK_THROWS_AS(select_determinants(h, 11), DomainError);
  }
}

TEST_CASE("perturbative order: reference first, descending magnitude") {
  CiHamiltonian h;
  h.matrix = Eigen::MatrixXd::Zero(4, 4);
  h.matrix << 0.0, 0.1, -0.5, 0.2,
              0.1, 2.0, 0.0, 0.0,
             -0.5, 0.0, 2.0, 0.0,
              0.2, 0.0, 0.0, 2.0;
  // |c~| = (1, 0.05, 0.25, 0.1)
  const auto order = perturbative_order(h);
  CHECK(order == std::vector<int>{0, 2, 3, 1});
}
