#include <fstream>

#include "qae/errors.hpp"
#include "qae_cli/cli.hpp"

namespace qae::cli {

using nlohmann::json;

namespace {

bool type_matches(const std::string& type, const json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  if (type == "number") return value.is_number();
  if (type == "integer") return value.is_number_integer();
  return false;
}

void check(const json& schema, const json& value, const std::string& where,
           std::vector<std::string>& problems) {
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(t.get<std::string>(), value);
    } else if (t.is_array()) {
      for (const auto& alt : t)
        if (type_matches(alt.get<std::string>(), value)) ok = true;
    }
    if (!ok) {
      problems.push_back(where + ": type mismatch (expected " + t.dump() +
                         ")");
      return;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& alt : schema["enum"])
      if (alt == value) ok = true;
    if (!ok) problems.push_back(where + ": value not in enum");
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          problems.push_back(where + ": missing required key '" +
                             key.get<std::string>() + "'");
    }
    if (schema.contains("properties")) {
      for (const auto& [key, sub] : schema["properties"].items())
        if (value.contains(key)) check(sub, value[key], where + "." + key,
                                       problems);
    }
  }
  if (value.is_array() && schema.contains("items")) {
    std::size_t i = 0;
    for (const auto& item : value) {
      check(schema["items"], item, where + "[" + std::to_string(i) + "]",
            problems);
      ++i;
    }
  }
}

}  // namespace

std::vector<std::string> schema_problems(const json& schema,
                                         const json& instance) {
  std::vector<std::string> problems;
  check(schema, instance, "$", problems);
  return problems;
}

std::string file_digest_fnv1a64(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file for digest: " + path);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buf[4096];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001b3ULL;
    }
    if (got < static_cast<std::streamsize>(sizeof(buf))) break;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(hash));
  return hex;
}

}  // namespace qae::cli
