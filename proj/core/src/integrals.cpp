#include "qae/integrals.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace qae {

namespace {

std::uint64_t tri(std::uint64_t a, std::uint64_t b) {
  // requires a >= b
  return a * (a + 1) / 2 + b;
}

}  // namespace

std::uint64_t IntegralSet::one_body_key(int p, int q) {
  const auto a = static_cast<std::uint64_t>(std::max(p, q));
  const auto b = static_cast<std::uint64_t>(std::min(p, q));
  return tri(a, b);
}

std::uint64_t IntegralSet::two_body_key(int p, int q, int r, int s) {
  const std::uint64_t pq = one_body_key(p, q);
  const std::uint64_t rs = one_body_key(r, s);
  return tri(std::max(pq, rs), std::min(pq, rs));
}

void IntegralSet::check_index(int i) const {
  if (i < 0 || i >= n_spatial_orbitals)
    throw IndexError("orbital index " + std::to_string(i) +
                     " outside [0, " + std::to_string(n_spatial_orbitals) +
                     ")");
}

double IntegralSet::one_body(int p, int q) const {
  check_index(p);
  check_index(q);
  const auto it = h_.find(one_body_key(p, q));
  return it == h_.end() ? 0.0 : it->second;
}

double IntegralSet::two_body(int p, int q, int r, int s) const {
  check_index(p);
  check_index(q);
  check_index(r);
  check_index(s);
  const auto it = g_.find(two_body_key(p, q, r, s));
  return it == g_.end() ? 0.0 : it->second;
}

void IntegralSet::set_one_body(int p, int q, double value) {
  check_index(p);
  check_index(q);
  h_[one_body_key(p, q)] = value;
}

void IntegralSet::set_two_body(int p, int q, int r, int s, double value) {
  check_index(p);
  check_index(q);
  check_index(r);
  check_index(s);
  g_[two_body_key(p, q, r, s)] = value;
}

namespace {

// Extracts `NAME = <int>` from the concatenated header text.
bool find_header_int(const std::string& header, const std::string& name,
                     long& out) {
  std::string upper(header);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  std::size_t pos = 0;
  while ((pos = upper.find(name, pos)) != std::string::npos) {
    std::size_t i = pos + name.size();
    while (i < upper.size() && std::isspace(static_cast<unsigned char>(upper[i])))
      ++i;
    if (i < upper.size() && upper[i] == '=') {
      ++i;
      while (i < upper.size() &&
             std::isspace(static_cast<unsigned char>(upper[i])))
        ++i;
      char* end = nullptr;
      const long v = std::strtol(header.c_str() + i, &end, 10);
      if (end != header.c_str() + i) {
        out = v;
        return true;
      }
    }
    pos += name.size();
  }
  return false;
}

bool is_header_end(const std::string& line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) continue;
    if (line[i] == '/') return true;
    if (line.compare(i, 4, "&END") == 0 || line.compare(i, 4, "&end") == 0)
      return true;
    // header continuation lines contain '=' assignments or commas
    return line.find("&END") != std::string::npos ||
           line.find("&end") != std::string::npos;
  }
  return false;
}

}  // namespace

IntegralSet parse_fcidump(std::istream& in) {
  std::string line;
  std::string header;
  int line_no = 0;
  bool header_done = false;

  // Header: everything up to (and including) the &END / '/' terminator.
  while (std::getline(in, line)) {
    ++line_no;
    header += ' ';
    header += line;
    if (is_header_end(line)) {
      header_done = true;
      break;
    }
    // Guard against a missing terminator: a line starting with a number
    // means we ran into the data section.
    std::istringstream probe(line);
    double v;
    int i, j, k, l;
    if (line_no > 1 && (probe >> v >> i >> j >> k >> l))
      throw ParseError("line " + std::to_string(line_no) +
                       ": header not terminated by &END or /");
  }
  if (!header_done)
    throw ParseError("line " + std::to_string(line_no) +
                     ": unterminated FCIDUMP header");

  long norb = 0, nelec = 0;
  if (!find_header_int(header, "NORB", norb))
    throw ParseError("line 1: header missing NORB");
  if (!find_header_int(header, "NELEC", nelec))
    throw ParseError("line 1: header missing NELEC");
  if (norb <= 0 || norb > 32)
    throw ParseError("line 1: NORB=" + std::to_string(norb) +
                     " outside supported range [1, 32]");
  if (nelec < 0 || nelec > 2 * norb)
    throw ParseError("line 1: NELEC=" + std::to_string(nelec) +
                     " inconsistent with NORB=" + std::to_string(norb));

  IntegralSet ints;
  ints.n_spatial_orbitals = static_cast<int>(norb);
  ints.n_electrons = static_cast<int>(nelec);
  ints.spin_restricted = true;

  const double kConflictTol = 1e-10;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    double value;
    long i, j, k, l;
    if (!(ls >> value)) continue;  // blank line
    if (!(ls >> i >> j >> k >> l))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected `value i j k l`");
    std::string tail;
    if (ls >> tail)
      throw ParseError("line " + std::to_string(line_no) +
                       ": trailing token '" + tail + "'");

    const auto in_range = [&](long x) { return x >= 1 && x <= norb; };

    if (i == 0 && j == 0 && k == 0 && l == 0) {
      ints.core_energy = value;
    } else if (k == 0 && l == 0) {
      if (!in_range(i) || !in_range(j))
        throw IndexError("line " + std::to_string(line_no) +
                         ": one-body index out of range [1, " +
                         std::to_string(norb) + "]");
      const auto key =
          IntegralSet::one_body_key(static_cast<int>(i - 1),
                                    static_cast<int>(j - 1));
      const auto it = ints.one_body_entries().find(key);
      if (it != ints.one_body_entries().end() &&
          std::abs(it->second - value) > kConflictTol)
        throw ConflictError("line " + std::to_string(line_no) +
                            ": h(" + std::to_string(i) + "," +
                            std::to_string(j) + ") redefined inconsistently");
      ints.set_one_body(static_cast<int>(i - 1), static_cast<int>(j - 1),
                        value);
    } else {
      if (!in_range(i) || !in_range(j) || !in_range(k) || !in_range(l))
        throw IndexError("line " + std::to_string(line_no) +
                         ": two-body index out of range [1, " +
                         std::to_string(norb) + "]");
      const auto key = IntegralSet::two_body_key(
          static_cast<int>(i - 1), static_cast<int>(j - 1),
          static_cast<int>(k - 1), static_cast<int>(l - 1));
      const auto it = ints.two_body_entries().find(key);
      if (it != ints.two_body_entries().end() &&
          std::abs(it->second - value) > kConflictTol)
        throw ConflictError("line " + std::to_string(line_no) + ": (" +
                            std::to_string(i) + std::to_string(j) + "|" +
                            std::to_string(k) + std::to_string(l) +
                            ") redefined inconsistently");
      ints.set_two_body(static_cast<int>(i - 1), static_cast<int>(j - 1),
                        static_cast<int>(k - 1), static_cast<int>(l - 1),
                        value);
    }
  }
  return ints;
}

IntegralSet parse_fcidump_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open integral file: " + path);
  return parse_fcidump(in);
}

void write_fcidump(const IntegralSet& ints, std::ostream& out) {
  out << "&FCI NORB=" << ints.n_spatial_orbitals
      << ",NELEC=" << ints.n_electrons << ",\n&END\n";
  out << std::scientific << std::setprecision(16);

  const int n = ints.n_spatial_orbitals;
  // Emit each unique entry once, via its canonical (largest-first) indices.
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= r; ++s) {
          if (IntegralSet::one_body_key(p, q) <
              IntegralSet::one_body_key(r, s))
            continue;
          const auto it = ints.two_body_entries().find(
              IntegralSet::two_body_key(p, q, r, s));
          if (it == ints.two_body_entries().end()) continue;
          out << it->second << ' ' << p + 1 << ' ' << q + 1 << ' ' << r + 1
              << ' ' << s + 1 << '\n';
        }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q) {
      const auto it =
          ints.one_body_entries().find(IntegralSet::one_body_key(p, q));
      if (it == ints.one_body_entries().end()) continue;
      out << it->second << ' ' << p + 1 << ' ' << q + 1 << " 0 0\n";
    }
  out << ints.core_energy << " 0 0 0 0\n";
}

}  // namespace qae
