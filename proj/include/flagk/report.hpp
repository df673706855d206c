#pragma once
// Suite/check reporting shared by the verifiers and the CLI.

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace flagk {

struct CheckResult {
  std::string name;
  bool pass = false;
  double ms = 0.0;
  nlohmann::json detail;  // counterexample or extra payload; null when unused
};

struct SuiteReport {
  std::string suite;
  nlohmann::json params;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void add(CheckResult c) { checks.push_back(std::move(c)); }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["params"] = params;
    j["pass"] = pass();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json jc{{"name", c.name}, {"pass", c.pass}, {"ms", c.ms}};
      if (!c.detail.is_null()) jc["detail"] = c.detail;
      j["checks"].push_back(std::move(jc));
    }
    return j;
  }

  std::string to_text() const;
};

// Runs f, timing it; on exception the check fails with the message recorded.
template <class F>
CheckResult run_check(const std::string& name, F&& f) {
  CheckResult r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.pass = f(r.detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = nlohmann::json{{"exception", e.what()}};
  }
  auto t1 = std::chrono::steady_clock::now();
  r.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

}  // namespace flagk
