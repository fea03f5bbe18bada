#include "io.hpp"

#include <fstream>
#include <sstream>

#include "qae/errors.hpp"
#include "qae/integrals.hpp"

namespace qae::cli {

CiHamiltonian load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path);

  std::vector<std::string> tokens;
  double offset = 0.0;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tok == "offset") {
        if (!(ls >> offset))
          throw ParseError(path + ": offset line needs a value");
      } else {
        tokens.push_back(tok);
      }
    }
  }
  if (tokens.empty()) throw ParseError(path + ": empty matrix file");

  std::size_t n = 0;
  try {
    n = std::stoul(tokens[0]);
  } catch (const std::exception&) {
    throw ParseError(path + ": first token must be the dimension");
  }
  if (n == 0 || tokens.size() != 1 + n * n)
    throw ParseError(path + ": expected " + std::to_string(n * n) +
                     " matrix entries");

  CiHamiltonian h;
  h.scalar_offset = offset;
  h.matrix.resize(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      try {
        h.matrix(i, j) = std::stod(tokens[1 + i * n + j]);
      } catch (const std::exception&) {
        throw ParseError(path + ": bad matrix entry '" +
                         tokens[1 + i * n + j] + "'");
      }
    }
  const double asym = (h.matrix - h.matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10)
    throw DomainError(path + ": matrix is not symmetric within 1e-10");
  return h;
}

namespace {

bool looks_like_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  char c;
  while (in.get(c)) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '&';
  }
  throw ParseError(path + ": empty input file");
}

}  // namespace

LoadedProblem load_problem(const std::string& matrix_path,
                           const std::string& fcidump_path,
                           const std::string& hamiltonian_path,
                           const std::string& active_space, int n_keep,
                           double epsilon, const std::string& dipole_path,
                           std::size_t basis_cap) {
  const int given = !matrix_path.empty() + !fcidump_path.empty() +
                    !hamiltonian_path.empty();
  if (given != 1)
    throw ConfigError("exactly one of --matrix, --fcidump, --hamiltonian "
                      "must be given");

  LoadedProblem lp;
  std::string as_matrix = matrix_path;
  std::string as_fcidump = fcidump_path;
  if (!hamiltonian_path.empty()) {
    if (looks_like_fcidump(hamiltonian_path))
      as_fcidump = hamiltonian_path;
    else
      as_matrix = hamiltonian_path;
  }

  if (!as_matrix.empty()) {
    if (!active_space.empty() || epsilon != 0.0 || !dipole_path.empty())
      throw ConfigError("--active-space/--epsilon/--dipole-integrals apply "
                        "to integral inputs only");
    lp.h = load_matrix_file(as_matrix);
    lp.inputs.emplace_back("matrix", as_matrix);
    if (n_keep > 0) lp.h = select_determinants(lp.h, n_keep);
    return lp;
  }

  const IntegralSet ints = parse_fcidump_file(as_fcidump);
  lp.inputs.emplace_back("fcidump", as_fcidump);

  ActiveSpace space;
  if (active_space.empty()) {
    space.n_spin_orbitals = 2 * ints.n_spatial_orbitals;
    space.n_electrons = ints.n_electrons;
    space.label = std::to_string(ints.n_spatial_orbitals) + "o," +
                  std::to_string(ints.n_electrons) + "e";
  } else {
    space = parse_active_space(active_space);
    if (space.n_spin_orbitals > 2 * ints.n_spatial_orbitals)
      throw ConfigError("active space needs " +
                        std::to_string(space.n_spin_orbitals / 2) +
                        " spatial orbitals but the integral set has " +
                        std::to_string(ints.n_spatial_orbitals));
  }

  const auto basis = generate_fci_basis(space, basis_cap);

  FieldSpec field;
  const FieldSpec* field_ptr = nullptr;
  if (epsilon != 0.0) {
    field.epsilon = epsilon;
    if (dipole_path.empty())
      throw ConfigError("--epsilon needs --dipole-integrals (or use a "
                        "pre-perturbed integral file)");
    field.dipole_integrals = parse_one_body_operator_file(dipole_path);
    lp.inputs.emplace_back("dipole", dipole_path);
    field_ptr = &field;
  }

  lp.h = assemble_hamiltonian(basis, ints, field_ptr);
  if (n_keep > 0)
    lp.h = select_determinants(lp.h, static_cast<std::size_t>(n_keep));
  return lp;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open csv file: " + path);
  CsvTable table;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (header) {
      table.columns = cells;
      header = false;
      continue;
    }
    if (cells.size() != table.columns.size())
      throw ParseError(path + ": row with " + std::to_string(cells.size()) +
                       " cells, expected " +
                       std::to_string(table.columns.size()));
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < cells.size(); ++i)
      row[table.columns[i]] = cells[i];
    table.rows.push_back(std::move(row));
  }
  if (table.columns.empty()) throw ParseError(path + ": empty csv");
  return table;
}

}  // namespace qae::cli
