#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace octacat {

/// Outcome of one verification item.
struct CheckResult {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  std::optional<nlohmann::json> counterexample;

  nlohmann::json to_json() const {
    nlohmann::json j{{"check", check}, {"params", params}, {"pass", pass}};
    if (counterexample) j["counterexample"] = *counterexample;
    return j;
  }

  std::string to_text() const {
    std::string line = (pass ? "PASS " : "FAIL ") + check;
    if (!params.empty()) line += " " + params.dump();
    if (counterexample) line += " counterexample=" + counterexample->dump();
    return line;
  }
};

using Report = std::vector<CheckResult>;

inline bool all_pass(const Report& r) {
  return std::all_of(r.begin(), r.end(), [](const CheckResult& c) { return c.pass; });
}

inline const CheckResult* first_failure(const Report& r) {
  auto it = std::find_if(r.begin(), r.end(), [](const CheckResult& c) { return !c.pass; });
  return it == r.end() ? nullptr : &*it;
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : r) arr.push_back(c.to_json());
  return arr;
}

inline void append(Report& into, Report more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace octacat
