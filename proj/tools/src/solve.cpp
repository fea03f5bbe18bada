#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>

#include "io.hpp"
#include "qae/oracle.hpp"
#include "qae/qae.hpp"
#include "qae/version.hpp"
#include "qae_cli/cli.hpp"

namespace qae::cli {

using nlohmann::ordered_json;

namespace {

int map_exception(std::ostream& err) {
  try {
    throw;
  } catch (const NoSolutionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoSolution;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

SolveOptions apply_manifest(SolveOptions opt) {
  std::ifstream in(opt.from_manifest);
  if (!in) throw ParseError("cannot open manifest: " + opt.from_manifest);
  ordered_json m;
  try {
    m = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw ParseError("manifest " + opt.from_manifest + ": " + e.what());
  }
  const auto& c = m.at("config");
  opt.active_space = c.at("active_space").get<std::string>();
  opt.n_keep = c.at("n_keep").get<int>();
  opt.epsilon = c.at("epsilon").get<double>();
  opt.lambda_min = c.at("lambda_min").get<double>();
  opt.lambda_max = c.at("lambda_max").get<double>();
  opt.lambda_points = c.at("lambda_points").get<int>();
  opt.repeats = c.at("repeats").get<int>();
  opt.k_bits = c.at("k_bits").get<int>();
  opt.max_subqubo_vars = c.at("max_subqubo_vars").get<int>();
  opt.reads = c.at("reads").get<int>();
  opt.sweeps = c.at("sweeps").get<int>();
  opt.t_start = c.at("t_start").get<double>();
  opt.t_end = c.at("t_end").get<double>();
  opt.seed = c.at("seed").get<std::uint64_t>();
  opt.sampler = c.at("sampler").get<std::string>();
  opt.parallel_sub_qubos = c.at("parallel_sub_qubos").get<bool>();
  for (const auto& input : m.at("inputs")) {
    const auto role = input.at("role").get<std::string>();
    const auto path = input.at("path").get<std::string>();
    if (role == "matrix")
      opt.matrix_path = path;
    else if (role == "fcidump")
      opt.fcidump_path = path;
    else if (role == "dipole")
      opt.dipole_path = path;
  }
  opt.hamiltonian_path.clear();
  return opt;
}

void write_trace_csv(const std::string& path, const QaeResult& r) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write trace csv: " + path);
  out << "lambda_index,lambda,repeat,raw_xi,refined_xi,energy,flips,"
         "degenerate\n";
  char buf[512];
  for (const auto& t : r.trace) {
    if (t.degenerate) {
      std::snprintf(buf, sizeof(buf), "%d,%.17g,%d,%.17g,%.17g,,%d,1\n",
                    t.lambda_index, t.lambda, t.repeat, t.raw_xi,
                    t.refined_xi, t.flips);
    } else {
      std::snprintf(buf, sizeof(buf), "%d,%.17g,%d,%.17g,%.17g,%.17g,%d,0\n",
                    t.lambda_index, t.lambda, t.repeat, t.raw_xi,
                    t.refined_xi, t.energy, t.flips);
    }
    out << buf;
  }
}

}  // namespace

int run_solve(const SolveOptions& opt_in, std::ostream& out,
              std::ostream& err) {
  try {
    SolveOptions opt = opt_in;
    if (!opt.from_manifest.empty()) opt = apply_manifest(opt);

    const auto t_begin = std::chrono::steady_clock::now();
    LoadedProblem lp =
        load_problem(opt.matrix_path, opt.fcidump_path, opt.hamiltonian_path,
                     opt.active_space, opt.n_keep, opt.epsilon,
                     opt.dipole_path, opt.basis_cap);
    const auto t_loaded = std::chrono::steady_clock::now();

    QaeConfig cfg;
    if (std::isnan(opt.lambda_min) != std::isnan(opt.lambda_max))
      throw ConfigError("--lambda-min and --lambda-max go together");
    if (std::isnan(opt.lambda_min)) {
      const auto [lo, hi] = default_lambda_bracket(lp.h, opt.lambda_margin);
      cfg.lambda_min = lo;
      cfg.lambda_max = hi;
    } else {
      cfg.lambda_min = opt.lambda_min;
      cfg.lambda_max = opt.lambda_max;
    }
    cfg.lambda_points = opt.lambda_points;
    cfg.repeats = opt.repeats;
    cfg.encoding.k_bits = opt.k_bits;
    cfg.max_subqubo_vars = opt.max_subqubo_vars;
    cfg.schedule.reads = opt.reads;
    cfg.schedule.sweeps = opt.sweeps;
    cfg.schedule.t_start = opt.t_start;
    cfg.schedule.t_end = opt.t_end;
    cfg.schedule.seed = opt.seed;
    cfg.parallel_sub_qubos = opt.parallel_sub_qubos;

    const auto sampler = make_sampler(opt.sampler);
    const QaeResult r = run_qae(lp.h, cfg, *sampler);
    const auto t_solved = std::chrono::steady_clock::now();

    ordered_json j;
    j["artifact_version"] = kVersion;
    j["command"] = "solve";
    ordered_json jc;
    jc["k_bits"] = cfg.encoding.k_bits;
    jc["max_subqubo_vars"] = cfg.max_subqubo_vars;
    jc["lambda_min"] = cfg.lambda_min;
    jc["lambda_max"] = cfg.lambda_max;
    jc["lambda_points"] = cfg.lambda_points;
    jc["repeats"] = cfg.repeats;
    jc["reads"] = cfg.schedule.reads;
    jc["sweeps"] = cfg.schedule.sweeps;
    jc["t_start"] = cfg.schedule.t_start;
    jc["t_end"] = cfg.schedule.t_end;
    jc["seed"] = cfg.schedule.seed;
    jc["sampler"] = opt.sampler;
    jc["n_keep"] = opt.n_keep;
    jc["epsilon"] = opt.epsilon;
    jc["active_space"] = opt.active_space;
    jc["parallel_sub_qubos"] = cfg.parallel_sub_qubos;
    j["config"] = std::move(jc);

    ordered_json inputs = ordered_json::array();
    for (const auto& [role, path] : lp.inputs) {
      ordered_json e;
      e["role"] = role;
      e["path"] = path;
      e["digest_fnv1a64"] = file_digest_fnv1a64(path);
      inputs.push_back(std::move(e));
    }
    j["inputs"] = std::move(inputs);

    ordered_json jr;
    jr["n_basis"] = static_cast<int>(lp.h.dimension());
    jr["scalar_offset"] = lp.h.scalar_offset;
    jr["best_energy"] = r.best_energy;
    jr["best_lambda"] = r.best_lambda;
    jr["best_lambda_index"] = r.best_lambda_index;
    jr["best_repeat"] = r.best_repeat;
    jr["best_coefficients"] = r.best_coefficients;
    jr["degenerate_points"] = r.degenerate_points;
    j["result"] = std::move(jr);

    ordered_json trace = ordered_json::array();
    for (const auto& t : r.trace) {
      ordered_json e;
      e["lambda_index"] = t.lambda_index;
      e["lambda"] = t.lambda;
      e["repeat"] = t.repeat;
      e["raw_xi"] = t.raw_xi;
      e["refined_xi"] = t.refined_xi;
      if (t.degenerate)
        e["energy"] = nullptr;
      else
        e["energy"] = t.energy;
      e["flips"] = t.flips;
      e["degenerate"] = t.degenerate;
      trace.push_back(std::move(e));
    }
    j["trace"] = std::move(trace);

    const std::string text = j.dump(2) + "\n";
    out << text;
    if (!opt.out_json.empty()) {
      std::ofstream f(opt.out_json, std::ios::binary);
      if (!f) throw ConfigError("cannot write report: " + opt.out_json);
      f << text;
    }
    if (!opt.trace_csv.empty()) write_trace_csv(opt.trace_csv, r);

    if (!opt.manifest_out.empty()) {
      const auto t_end = std::chrono::steady_clock::now();
      const auto ms = [](auto a, auto b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
      };
      ordered_json m;
      m["artifact_version"] = kVersion;
      m["command"] = "solve";
      m["config"] = j["config"];
      m["inputs"] = j["inputs"];
      ordered_json timings;
      timings["load_ms"] = ms(t_begin, t_loaded);
      timings["solve_ms"] = ms(t_loaded, t_solved);
      timings["total_ms"] = ms(t_begin, t_end);
      m["timings"] = std::move(timings);
      std::ofstream f(opt.manifest_out, std::ios::binary);
      if (!f) throw ConfigError("cannot write manifest: " + opt.manifest_out);
      f << m.dump(2) << "\n";
    }
    return kExitOk;
  } catch (...) {
    return map_exception(err);
  }
}

int run_exact(const ExactOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    LoadedProblem lp =
        load_problem(opt.matrix_path, opt.fcidump_path, opt.hamiltonian_path,
                     opt.active_space, 0, 0.0, "", opt.basis_cap);
    const auto [energy, vec] = oracle::exact_ground(lp.h, opt.basis_cap);

    ordered_json j;
    j["artifact_version"] = kVersion;
    j["command"] = "exact";
    j["n_basis"] = static_cast<int>(lp.h.dimension());
    j["scalar_offset"] = lp.h.scalar_offset;
    j["energy"] = energy;
    j["ground_vector"] = vec;
    const std::string text = j.dump(2) + "\n";
    out << text;
    if (!opt.out_json.empty()) {
      std::ofstream f(opt.out_json, std::ios::binary);
      if (!f) throw ConfigError("cannot write report: " + opt.out_json);
      f << text;
    }
    return kExitOk;
  } catch (...) {
    return map_exception(err);
  }
}

}  // namespace qae::cli
