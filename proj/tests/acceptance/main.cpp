// One line per acceptance criterion: suite, case floor, wall-time limit.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "trunclab/props/suites.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  std::size_t cases;      // requested
  std::size_t min_cases;  // required in the result
  double limit_s;
};

constexpr Criterion criteria[] = {
    {1, "truncation axioms", "axioms", 200, 200, 5},
    {2, "identity suite", "identities", 200, 200, 5},
    {3, "good-sequence bijection", "good-sequences", 200, 200, 5},
    {4, "idealized algebra construction", "idealize", 200, 200, 30},
    {5, "equivalence round trips", "equivalence", 0, 15, 30},
    {6, "frame operations vs grid formula", "frame-ops", 100, 100, 60},
    {7, "truncate / tminus case tables", "case-tables", 200, 200, 5},
    {8, "normal form and clearance", "normal-form", 200, 200, 5},
    {9, "omega+1 counterexample battery", "ex1", 500, 1, 10},
    {10, "degree-2 refutation", "degree-two", 0, 1, 1},
    {11, "Dini criterion", "dini", 100, 100, 5},
    {12, "drop and lift search", "drop-e0q", 100, 100, 60},
};

}  // namespace

int main(int argc, char** argv) {
  trunclab::props::SuiteOptions opts;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0) opts.seed = std::strtoull(argv[i + 1], nullptr, 10);
  }
  int failed = 0;
  for (const auto& c : criteria) {
    const auto* s = trunclab::props::find_suite(c.suite);
    auto o = opts;
    o.cases = c.cases;
    auto r = trunclab::props::run_suite(*s, o);
    const bool ok = r.pass() && r.cases >= c.min_cases && r.seconds < c.limit_s;
    if (!ok) ++failed;
    std::printf("[%s] %2d %-34s %5zu cases %7zu checks %zu failures %7.2f s (limit %g s)\n", ok ? "PASS" : "FAIL", c.id,
                c.title, r.cases, r.checks, r.failures, r.seconds, c.limit_s);
    for (const auto& m : r.messages) std::printf("       %s\n", m.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
