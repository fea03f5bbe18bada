#include <CLI11.hpp>
#include <iostream>

#include "qae/version.hpp"
#include "qae_cli/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "qae: configuration-interaction eigensolver on a binary-annealing "
      "backend, with finite-field dipole moments"};
  app.set_version_flag("--version", qae::kVersion);
  app.require_subcommand(1);

  qae::cli::SolveOptions solve;
  auto* cmd_solve = app.add_subcommand(
      "solve", "Find the ground-state energy by the lambda-scanned "
               "annealing pipeline");
  cmd_solve->add_option("--matrix", solve.matrix_path,
                        "Dense symmetric matrix file");
  cmd_solve->add_option("--fcidump,--integrals", solve.fcidump_path,
                        "Electron integral file (FCIDUMP format)");
  cmd_solve->add_option("--hamiltonian", solve.hamiltonian_path,
                        "Matrix or FCIDUMP file; format auto-detected");
  cmd_solve->add_option("--active-space", solve.active_space,
                        "Active space label, e.g. \"8o,3e\"");
  cmd_solve->add_option("--n-keep", solve.n_keep,
                        "Determinants kept by perturbative selection "
                        "(0 = all)");
  cmd_solve->add_option("--epsilon", solve.epsilon,
                        "Field strength for the dipole perturbation (a.u.)");
  cmd_solve->add_option("--dipole-integrals", solve.dipole_path,
                        "z-dipole matrix elements, lines `value p q`");
  cmd_solve->add_option("--basis-cap", solve.basis_cap,
                        "Determinant count limit");
  cmd_solve->add_option("--lambda-min", solve.lambda_min, "Scan lower end");
  cmd_solve->add_option("--lambda-max", solve.lambda_max, "Scan upper end");
  cmd_solve->add_option("--lambda-margin", solve.lambda_margin,
                        "Margin fraction for the default bracket");
  cmd_solve->add_option("--lambda-points", solve.lambda_points,
                        "Grid points in the scan");
  cmd_solve->add_option("--repeats", solve.repeats, "Independent runs");
  cmd_solve->add_option("--k-bits", solve.k_bits,
                        "Bits per CI coefficient");
  cmd_solve->add_option("--max-subqubo-vars", solve.max_subqubo_vars,
                        "Binary-variable cap per sub-problem");
  cmd_solve->add_option("--reads", solve.reads, "Annealing restarts");
  cmd_solve->add_option("--sweeps", solve.sweeps, "Sweeps per read");
  cmd_solve->add_option("--t-start", solve.t_start,
                        "Start temperature (0 = auto)");
  cmd_solve->add_option("--t-end", solve.t_end,
                        "End temperature (0 = auto)");
  cmd_solve->add_option("--seed", solve.seed, "Master random seed");
  cmd_solve->add_option("--sampler", solve.sampler, "sa or brute");
  cmd_solve->add_flag("--parallel-subqubos", solve.parallel_sub_qubos,
                      "Sample the sub-problems of one step concurrently");
  cmd_solve->add_option("--out", solve.out_json, "Report JSON path");
  cmd_solve->add_option("--trace-csv", solve.trace_csv,
                        "Per-(lambda, repeat) trace CSV path");
  cmd_solve->add_option("--manifest", solve.manifest_out,
                        "Run manifest path (config, digests, timings)");
  cmd_solve->add_option("--from-manifest", solve.from_manifest,
                        "Re-run the configuration of a prior manifest");

  qae::cli::PdmOptions pdm;
  auto* cmd_pdm = app.add_subcommand(
      "pdm", "Assemble a dipole moment from two field energies");
  cmd_pdm->add_option("--e-plus", pdm.e_plus, "Energy at +epsilon (hartree)")
      ->required();
  cmd_pdm->add_option("--e-minus", pdm.e_minus,
                      "Energy at -epsilon (hartree)")
      ->required();
  cmd_pdm->add_option("--epsilon", pdm.epsilon, "Field strength (a.u.)");
  cmd_pdm->add_option("--geometry", pdm.geometry_path,
                      "Geometry file, lines `Z z_angstrom`");
  cmd_pdm->add_flag("--keep-sign", pdm.keep_sign,
                    "Report the signed difference instead of |.|");
  cmd_pdm->add_option("--out", pdm.out_json, "Report JSON path");

  qae::cli::ExactOptions exact;
  auto* cmd_exact = app.add_subcommand(
      "exact", "Exact lowest eigenpair by dense diagonalization");
  cmd_exact->add_option("--matrix", exact.matrix_path,
                        "Dense symmetric matrix file");
  cmd_exact->add_option("--fcidump,--integrals", exact.fcidump_path,
                        "Electron integral file");
  cmd_exact->add_option("--hamiltonian", exact.hamiltonian_path,
                        "Matrix or FCIDUMP file; format auto-detected");
  cmd_exact->add_option("--active-space", exact.active_space,
                        "Active space label");
  cmd_exact->add_option("--basis-cap", exact.basis_cap,
                        "Determinant count limit");
  cmd_exact->add_option("--out", exact.out_json, "Report JSON path");

  qae::cli::BenchmarkOptions bench;
  auto* cmd_bench = app.add_subcommand(
      "benchmark", "Recompute the dipole tables from the shipped "
                   "field-energy fixtures");
  cmd_bench->add_option("--fixtures", bench.fixture_dir,
                        "Fixture directory (default: $QAE_FIXTURES, then "
                        "./fixtures)");
  cmd_bench->add_option("--csv", bench.out_csv, "Write the table as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : qae::cli::kExitUsage;
  }

  if (cmd_solve->parsed())
    return qae::cli::run_solve(solve, std::cout, std::cerr);
  if (cmd_pdm->parsed()) return qae::cli::run_pdm(pdm, std::cout, std::cerr);
  if (cmd_exact->parsed())
    return qae::cli::run_exact(exact, std::cout, std::cerr);
  if (cmd_bench->parsed())
    return qae::cli::run_benchmark(bench, std::cout, std::cerr);
  return qae::cli::kExitUsage;
}
