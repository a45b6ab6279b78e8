#pragma once

#include <string>

#include <json.hpp>

namespace hsalg {

/// Outcome of one verification: pass flag, payload and, on failure, a
/// counterexample describing the first offending case.
struct CheckReport {
  std::string name;
  bool pass = true;
  nlohmann::json payload = nlohmann::json::object();
  nlohmann::json counterexample;

  void fail(nlohmann::json witness) {
    if (pass) counterexample = std::move(witness);
    pass = false;
  }
  /// Records a sub-check under payload["checks"][key] and folds it into pass.
  void require(const std::string& key, bool ok, const nlohmann::json& witness = nullptr) {
    payload["checks"][key] = ok;
    if (!ok) fail({{"check", key}, {"witness", witness}});
  }
  nlohmann::json to_json() const {
    nlohmann::json j = {{"name", name}, {"status", pass ? "pass" : "fail"}, {"payload", payload}};
    if (!pass) j["counterexample"] = counterexample;
    return j;
  }
};

}  // namespace hsalg
