#pragma once

#include <exception>
#include <string>

#include "trunclab/op.hpp"
#include "trunclab/props/suites.hpp"
#include "trunclab/random.hpp"

namespace trunclab::props {

class Tally {
public:
  explicit Tally(SuiteResult& r) : r_(r) {}

  template <class Msg>
  void expect(bool ok, Msg&& msg) {
    ++r_.checks;
    if (ok) return;
    ++r_.failures;
    if (r_.messages.size() < 5) r_.messages.push_back(std::string(msg()));
  }

  /// One input; an exception counts as a failure of that case.
  template <class F>
  void run_case(const std::string& label, F&& f) {
    ++r_.cases;
    try {
      f();
    } catch (const std::exception& e) {
      expect(false, [&] { return label + ": threw " + e.what(); });
    }
  }

private:
  SuiteResult& r_;
};

inline Sampler case_rng(const SuiteOptions& o, std::size_t i, std::uint64_t salt = 0) {
  return Sampler(o.seed * 0x9e3779b97f4a7c15ULL + i * 1000003ULL + salt);
}

inline std::string case_label(std::size_t i) { return "case " + std::to_string(i); }

}  // namespace trunclab::props
