#include <fstream>
#include <ostream>

#include "qae/errors.hpp"
#include "qae/ffm.hpp"
#include "qae/version.hpp"
#include "qae_cli/cli.hpp"

namespace qae::cli {

using nlohmann::ordered_json;

int run_pdm(const PdmOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    FfmInput input;
    input.e_plus = opt.e_plus;
    input.e_minus = opt.e_minus;
    input.epsilon = opt.epsilon;
    if (!(input.epsilon > 0.0))
      throw ConfigError("--epsilon must be positive");

    Geometry g;
    if (!opt.geometry_path.empty())
      g = parse_geometry_file(opt.geometry_path);

    const DipoleResult r = assemble_pdm(input, g, opt.keep_sign);

    ordered_json j;
    j["artifact_version"] = kVersion;
    j["command"] = "pdm";
    ordered_json in;
    in["e_plus"] = input.e_plus;
    in["e_minus"] = input.e_minus;
    in["epsilon"] = input.epsilon;
    in["geometry"] = opt.geometry_path;
    in["keep_sign"] = opt.keep_sign;
    j["input"] = std::move(in);
    j["electronic_slope"] = r.electronic_slope;
    j["nuclear_term"] = r.nuclear_term;
    j["pdm_au"] = r.pdm_au;
    j["pdm_debye"] = r.pdm_debye;
    const std::string text = j.dump(2) + "\n";
    out << text;
    if (!opt.out_json.empty()) {
      std::ofstream f(opt.out_json, std::ios::binary);
      if (!f) throw ConfigError("cannot write report: " + opt.out_json);
      f << text;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qae::cli
