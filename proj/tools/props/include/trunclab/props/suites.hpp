#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace trunclab::props {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t cases = 200;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;   // inputs examined
  std::size_t checks = 0;  // exact comparisons made
  std::size_t failures = 0;
  std::vector<std::string> messages = {};  // the first few failures
  double seconds = 0;
  bool pass() const { return failures == 0 && cases > 0; }
};

struct Suite {
  std::string_view name;
  std::string_view summary;
  SuiteResult (*run)(const SuiteOptions&);
};

const std::vector<Suite>& suites();
const Suite* find_suite(std::string_view name);
/// Runs one suite and records its wall time.
SuiteResult run_suite(const Suite& s, const SuiteOptions& opts);
/// Every suite, concurrently; results in registry order.
std::vector<SuiteResult> run_all(const SuiteOptions& opts);

// The suites. Each case draws from its own Sampler seeded by (seed, case
// index), so results do not depend on scheduling.
SuiteResult suite_axioms(const SuiteOptions& opts);
SuiteResult suite_identities(const SuiteOptions& opts);
SuiteResult suite_good_sequences(const SuiteOptions& opts);
SuiteResult suite_idealize(const SuiteOptions& opts);
SuiteResult suite_equivalence(const SuiteOptions& opts);
SuiteResult suite_frame_ops(const SuiteOptions& opts);
SuiteResult suite_case_tables(const SuiteOptions& opts);
SuiteResult suite_normal_form(const SuiteOptions& opts);
SuiteResult suite_bounded_away(const SuiteOptions& opts);
SuiteResult suite_ex1(const SuiteOptions& opts);
SuiteResult suite_degree_two(const SuiteOptions& opts);
SuiteResult suite_dini(const SuiteOptions& opts);
SuiteResult suite_drop_e0q(const SuiteOptions& opts);
SuiteResult suite_galois_uc(const SuiteOptions& opts);
SuiteResult suite_seq_closure(const SuiteOptions& opts);
SuiteResult suite_kernel(const SuiteOptions& opts);
SuiteResult suite_roundtrip(const SuiteOptions& opts);

}  // namespace trunclab::props
