#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

namespace qae::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;      // configuration / input error
inline constexpr int kExitNoSolution = 3; // scan produced nothing usable

struct SolveOptions {
  std::string matrix_path;
  std::string fcidump_path;
  std::string hamiltonian_path;  // auto-detected format
  std::string active_space;      // e.g. "8o,3e"; empty = all orbitals
  int n_keep = 0;                // 0 = keep the full basis
  double epsilon = 0.0;
  std::string dipole_path;
  std::size_t basis_cap = 4096;

  // Lambda scan; NaN bounds fall back to the default bracket.
  double lambda_min = std::numeric_limits<double>::quiet_NaN();
  double lambda_max = std::numeric_limits<double>::quiet_NaN();
  double lambda_margin = 0.05;
  int lambda_points = 51;
  int repeats = 3;

  int k_bits = 10;
  int max_subqubo_vars = 60;
  int reads = 1000;
  int sweeps = 1000;
  double t_start = 0.0;
  double t_end = 0.0;
  std::uint64_t seed = 0;
  std::string sampler = "sa";
  bool parallel_sub_qubos = false;

  std::string out_json;      // report file (also echoed to stdout)
  std::string trace_csv;
  std::string manifest_out;  // run manifest with timings
  std::string from_manifest; // load config + inputs from a prior manifest
};

struct PdmOptions {
  double e_plus = 0.0;
  double e_minus = 0.0;
  double epsilon = 1e-3;
  std::string geometry_path;
  bool keep_sign = false;
  std::string out_json;
};

struct ExactOptions {
  std::string matrix_path;
  std::string fcidump_path;
  std::string hamiltonian_path;
  std::string active_space;
  std::size_t basis_cap = 4096;
  std::string out_json;
};

struct BenchmarkOptions {
  std::string fixture_dir;  // empty: $QAE_FIXTURES, then ./fixtures
  std::string out_csv;
};

int run_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);
int run_pdm(const PdmOptions& opt, std::ostream& out, std::ostream& err);
int run_exact(const ExactOptions& opt, std::ostream& out, std::ostream& err);
int run_benchmark(const BenchmarkOptions& opt, std::ostream& out,
                  std::ostream& err);

/// One molecule/basis line of the benchmark table.
struct BenchRow {
  std::string active_space;
  std::string molecule;
  std::string basis;
  double pdm_fci = 0.0;  // computed from the shipped field energies
  double pdm_sa = 0.0;
  double pdm_qae = 0.0;
  double err_qae = 0.0;  // |QAE-FCI|/|FCI| * 100, computed
  double err_sa = 0.0;
  double ref_pdm_fci = 0.0;  // shipped reference values
  double ref_pdm_sa = 0.0;
  double ref_pdm_qae = 0.0;
  double ref_err_qae = 0.0;
  double ref_err_sa = 0.0;
};

/// Fixture-driven dipole table; throws qae errors on missing/empty input.
std::vector<BenchRow> compute_benchmark(const std::string& fixture_dir);

/// Minimal JSON-schema conformance check (type/properties/required/items/
/// enum, the subset the shipped schema uses). Returns problem strings;
/// empty means the instance validates.
std::vector<std::string> schema_problems(const nlohmann::json& schema,
                                         const nlohmann::json& instance);

/// FNV-1a 64-bit digest of a file's bytes, as fixed-width hex.
std::string file_digest_fnv1a64(const std::string& path);

}  // namespace qae::cli
