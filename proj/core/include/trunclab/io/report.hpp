#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace trunclab::io {

struct CheckOutcome {
  std::string name;
  bool pass = true;
  std::string witness;  // empty when there is nothing to show
};

/// Output of one command. Machine values keep insertion order so the JSON is
/// byte-stable for a fixed (file, command, seed).
class Report {
public:
  using Value = std::variant<bool, std::int64_t, std::string>;

  explicit Report(std::string command) : command_(std::move(command)) {}

  void check(std::string name, bool pass, std::string witness = {});
  void line(std::string text) { lines_.push_back(std::move(text)); }
  void value(std::string key, Value v) { values_.emplace_back(std::move(key), std::move(v)); }

  const std::string& command() const { return command_; }
  const std::vector<CheckOutcome>& checks() const { return checks_; }
  const std::vector<std::string>& lines() const { return lines_; }
  const std::vector<std::pair<std::string, Value>>& values() const { return values_; }

  bool pass() const;
  int exit_code() const { return pass() ? 0 : 1; }

  std::string human() const;
  std::string json() const;

private:
  std::string command_;
  std::vector<CheckOutcome> checks_;
  std::vector<std::string> lines_;
  std::vector<std::pair<std::string, Value>> values_;
};

}  // namespace trunclab::io
