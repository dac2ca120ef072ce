#include "trunclab/io/report.hpp"

#include <algorithm>
#include <json.hpp>

namespace trunclab::io {

void Report::check(std::string name, bool pass, std::string witness) {
  checks_.push_back({std::move(name), pass, std::move(witness)});
}

bool Report::pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckOutcome& c) { return c.pass; });
}

std::string Report::human() const {
  std::string out = "$ " + command_ + "\n";
  for (const auto& l : lines_) out += l + "\n";
  for (const auto& c : checks_) {
    out += std::string(c.pass ? "PASS " : "FAIL ") + c.name;
    if (!c.witness.empty()) out += "  [" + c.witness + "]";
    out += "\n";
  }
  out += pass() ? "result: pass\n" : "result: fail\n";
  return out;
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["command"] = command_;
  j["pass"] = pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.witness.empty()) e["witness"] = c.witness;
    j["checks"].push_back(std::move(e));
  }
  nlohmann::ordered_json vals = nlohmann::ordered_json::object();
  for (const auto& [k, v] : values_) {
    std::visit([&](const auto& x) { vals[k] = x; }, v);
  }
  j["values"] = std::move(vals);
  return j.dump(2) + "\n";
}

}  // namespace trunclab::io
