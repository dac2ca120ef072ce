#include "trunclab/props/suites.hpp"

#include <chrono>
#include <future>

#include "tally.hpp"
#include "trunclab/io/instance.hpp"
#include "trunclab/kernel/kernel.hpp"
#include "trunclab/props/generators.hpp"

namespace trunclab::props {

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"axioms", "truncation axioms on simple, tail and frame elements", suite_axioms},
      {"identities", "meet/minus identities, good partial sums, sup of truncations", suite_identities},
      {"good-sequences", "good sequences against truncation sequences", suite_good_sequences},
      {"idealize", "difference uniqueness and the idealized Boolean algebra", suite_idealize},
      {"equivalence", "round trips on every pointed space up to 5 points", suite_equivalence},
      {"frame-ops", "cell-wise operations against the grid formula", suite_frame_ops},
      {"case-tables", "truncate and tminus 1 opens by cases", suite_case_tables},
      {"normal-form", "normal form and the clearance loop", suite_normal_form},
      {"bounded-away", "bounded away from 0, before and after truncation", suite_bounded_away},
      {"ex1", "the omega+1 counterexample battery", suite_ex1},
      {"degree-two", "exact refutation in degree 2", suite_degree_two},
      {"dini", "monotone convergence on frames and omega+1", suite_dini},
      {"drop-e0q", "drop soundness and lift search", suite_drop_e0q},
      {"galois-uc", "adjoint law, unital components, open quotients", suite_galois_uc},
      {"seq-closure", "tail operations against pointwise arithmetic", suite_seq_closure},
      {"kernel", "kernel conditions, pointwise closure and closure", suite_kernel},
      {"roundtrip", "instance serialization round trips", suite_roundtrip},
  };
  return all;
}

const Suite* find_suite(std::string_view name) {
  for (const auto& s : suites()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

SuiteResult run_suite(const Suite& s, const SuiteOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  auto r = s.run(opts);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SuiteResult> run_all(const SuiteOptions& opts) {
  std::vector<std::future<SuiteResult>> jobs;
  for (const auto& s : suites()) jobs.push_back(std::async(std::launch::async, [&s, opts] { return run_suite(s, opts); }));
  std::vector<SuiteResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

SuiteResult suite_roundtrip(const SuiteOptions& o) {
  SuiteResult r{"roundtrip"};
  Tally t(r);
  for (std::size_t i = 0; i < o.cases; ++i) {
    auto rng = case_rng(o, i);
    t.run_case(case_label(i), [&] {
      io::Instance inst;
      auto x = random_space(rng, 2, 5);
      inst.add("X", x);
      inst.add("g", random_simple(x, rng));
      inst.add("h", random_simple(x, rng, true));
      auto comps = random_components(x, rng);
      inst.add("A", io::Family{"X", comps});
      trunc::SimpleTrunc tr(x, comps);
      inst.add("G", tr);
      io::Sequence s;
      s.kind = io::Sequence::Kind::simple;
      s.stable = rng.coin();
      s.term_names = {"g", "h"};
      inst.add("gs", s);
      auto fam = random_closed_family(rng, 4, 16);
      std::vector<std::string> universe = {"0", "1", "2", "3"};
      inst.add("B", io::Gba{boolean::GeneralizedBooleanAlgebra::from_family(fam, [](Subset u) {
                              std::string l = "{";
                              for (auto k : u.indices()) l += (l.size() > 1 ? "," : "") + std::to_string(k);
                              return l + "}";
                            }),
                            universe});
      auto q = random_surjection(rng, 12);
      inst.add("F", q.source()->frame_ptr());
      if (!(*q.target()->frame_ptr() == *q.source()->frame_ptr())) inst.add("T", q.target()->frame_ptr());
      inst.add("Fp", q.source());
      if (!(*q.target() == *q.source())) inst.add("Tp", q.target());
      inst.add("q", q);
      inst.add("r", random_frame_real(q.source(), rng));
      inst.add("e", random_extended_real(q.source(), rng));
      seq::SeqTrunc m(static_cast<std::size_t>(rng.uniform(0, 2)));
      inst.add("S", m);
      inst.add("t", m.sample(rng));
      inst.add("K", io::Kernel{"S", kernel::SeqKernel(m, std::nullopt, static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(m.degree()) + 1)))});
      Subset support;
      for (std::size_t p = 1; p < x->size(); ++p) {
        if (rng.coin()) support = support.with(p);
      }
      inst.add("KG", io::Kernel{"G", kernel::SimpleKernel(tr, support)});

      const auto text = io::serialize(inst);
      auto back = io::parse_instance_text(text);
      t.expect(back.ok(), [&] { return "reparse failed: " + back.errors[0].to_string() + "\n" + text; });
      if (!back.ok()) return;
      t.expect(*back.instance == inst, [&] { return "reparsed instance differs:\n" + text; });
      t.expect(io::serialize(*back.instance) == text, [&] { return "serialization is not stable:\n" + text; });
    });
  }
  return r;
}

}  // namespace trunclab::props
