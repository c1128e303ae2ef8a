#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace qhaar {

/// One verified identity: named check, parameters, residual against tolerance.
struct CheckResult {
  std::string suite;
  std::string check;
  std::map<std::string, std::string> params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::int64_t runtime_ms = 0;

  static CheckResult make(std::string suite, std::string check,
                          std::map<std::string, std::string> params, double residual,
                          double tolerance) {
    CheckResult r;
    r.suite = std::move(suite);
    r.check = std::move(check);
    r.params = std::move(params);
    r.residual = residual;
    r.tolerance = tolerance;
    r.pass = residual <= tolerance;
    return r;
  }
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> config;

  bool aggregate_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void append(const SuiteReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  void append(std::vector<CheckResult> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  }
};

inline nlohmann::ordered_json to_json(const CheckResult& c) {
  nlohmann::ordered_json j;
  j["suite"] = c.suite;
  j["check"] = c.check;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.params) p[k] = v;
  j["params"] = p;
  j["residual"] = c.residual;
  j["tolerance"] = c.tolerance;
  j["pass"] = c.pass;
  // wall-clock excluded from reports so identical (config, seed) runs are
  // byte-identical; the field is kept for schema stability
  j["runtime_ms"] = 0;
  return j;
}

/// JSON form: one object per check, newline-terminated UTF-8.
inline std::string emit_json(const SuiteReport& r) {
  nlohmann::ordered_json root = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) root.push_back(to_json(c));
  return root.dump(2) + "\n";
}

inline SuiteReport parse_json(const std::string& text) {
  SuiteReport r;
  auto root = nlohmann::ordered_json::parse(text);
  for (const auto& j : root) {
    CheckResult c;
    c.suite = j.at("suite").get<std::string>();
    c.check = j.at("check").get<std::string>();
    for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
      c.params[it.key()] = it.value().get<std::string>();
    c.residual = j.at("residual").get<double>();
    c.tolerance = j.at("tolerance").get<double>();
    c.pass = j.at("pass").get<bool>();
    c.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

/// Markdown form: one table per suite, columns check | params | residual | tolerance | pass.
inline std::string emit_markdown(const SuiteReport& r) {
  std::ostringstream os;
  std::string current;
  bool first = true;
  for (const auto& c : r.checks) {
    if (c.suite != current) {
      current = c.suite;
      if (!first) os << "\n";
      first = false;
      os << "## " << current << "\n\n";
      os << "| check | params | residual | tolerance | pass |\n";
      os << "|---|---|---|---|---|\n";
    }
    std::ostringstream ps;
    bool firstp = true;
    for (const auto& [k, v] : c.params) {
      if (!firstp) ps << ", ";
      firstp = false;
      ps << k << "=" << v;
    }
    os << "| " << c.check << " | " << ps.str() << " | ";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", c.residual);
    os << buf << " | ";
    std::snprintf(buf, sizeof buf, "%.1e", c.tolerance);
    os << buf << " | " << (c.pass ? "yes" : "NO") << " |\n";
  }
  return os.str();
}

}  // namespace qhaar
