#pragma once

#include <map>
#include <string>
#include <vector>

#include "qae/ci.hpp"

namespace qae::cli {

/// Plain-text symmetric matrix:
///   # comments allowed
///   N
///   N rows of N entries
///   offset <value>        (optional scalar offset line)
CiHamiltonian load_matrix_file(const std::string& path);

/// Problem assembly shared by `solve` and `exact`. Exactly one of the
/// three path fields must be set; `hamiltonian_path` sniffs the format
/// (a namelist header means FCIDUMP). Returns the Hamiltonian plus the
/// (role, path) list of files consumed.
struct LoadedProblem {
  CiHamiltonian h;
  std::vector<std::pair<std::string, std::string>> inputs;
};
LoadedProblem load_problem(const std::string& matrix_path,
                           const std::string& fcidump_path,
                           const std::string& hamiltonian_path,
                           const std::string& active_space, int n_keep,
                           double epsilon, const std::string& dipole_path,
                           std::size_t basis_cap);

/// Header-keyed CSV with string cells.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::map<std::string, std::string>> rows;
};
CsvTable read_csv(const std::string& path);

}  // namespace qae::cli
