#include "tally.hpp"
#include "trunclab/boolean/equivalence.hpp"
#include "trunclab/props/generators.hpp"
#include "trunclab/props/oracles.hpp"
#include "trunclab/trunc/simple_trunc.hpp"

namespace trunclab::props {

namespace {

// Every Boolean-algebra equation over all pairs and triples. Returns the first
// failing law, or an empty string.
std::string boolean_laws(const boolean::BooleanAlgebra& b) {
  const std::size_t n = b.size();
  const auto bot = b.bottom(), top = b.top();
  for (std::size_t x = 0; x < n; ++x) {
    if (b.join(x, bot) != x || b.meet(x, top) != x) return "bounds at " + b.label(x);
    if (b.join(x, b.complement(x)) != top || b.meet(x, b.complement(x)) != bot) return "complement at " + b.label(x);
    if (b.join(x, x) != x || b.meet(x, x) != x) return "idempotence at " + b.label(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (b.join(x, y) != b.join(y, x) || b.meet(x, y) != b.meet(y, x)) return "commutativity";
      if (b.join(x, b.meet(x, y)) != x || b.meet(x, b.join(x, y)) != x) return "absorption";
      for (std::size_t z = 0; z < n; ++z) {
        if (b.join(x, b.join(y, z)) != b.join(b.join(x, y), z)) return "join associativity";
        if (b.meet(x, b.meet(y, z)) != b.meet(b.meet(x, y), z)) return "meet associativity";
        if (b.meet(x, b.join(y, z)) != b.join(b.meet(x, y), b.meet(x, z))) return "meet distributivity";
        if (b.join(x, b.meet(y, z)) != b.meet(b.join(x, y), b.join(x, z))) return "join distributivity";
      }
    }
  }
  return {};
}

std::string maximal_ideal(const boolean::IdealizedBooleanAlgebra& bi) {
  const auto& b = bi.algebra;
  if (!bi.in_ideal(b.bottom())) return "bottom outside the ideal";
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (bi.in_ideal(x) == bi.in_ideal(b.complement(x))) return "not exactly one of " + b.label(x) + " and its complement";
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (bi.in_ideal(x) && bi.in_ideal(y) && !bi.in_ideal(b.join(x, y))) return "not closed under joins";
      if (bi.in_ideal(x) && b.leq(y, x) && !bi.in_ideal(y)) return "not a downset";
    }
  }
  return {};
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

}  // namespace

SuiteResult suite_idealize(const SuiteOptions& o) {
  SuiteResult r{"idealize"};
  Tally t(r);
  for (std::size_t i = 0; i < o.cases; ++i) {
    auto rng = case_rng(o, i);
    t.run_case(case_label(i), [&] {
      auto a = random_gba(rng, 16);
      for (std::size_t x = 0; x < a.size(); ++x) {
        for (std::size_t y = 0; y < a.size(); ++y) {
          auto d = brute_diff(a, x, y);
          t.expect(d.size() == 1 && d[0] == boolean::gba_diff(a, x, y),
                   [&] { return "difference of " + a.label(x) + " and " + a.label(y) + " is not unique or wrong"; });
        }
      }
      auto bi = boolean::idealize(a);
      t.expect(bi.algebra.size() == 2 * a.size(), [&] { return "idealized algebra has the wrong size"; });
      auto law = boolean_laws(bi.algebra);
      t.expect(law.empty(), [&] { return "idealize breaks " + law + " (size " + std::to_string(a.size()) + ")"; });
      auto ideal = maximal_ideal(bi);
      t.expect(ideal.empty(), [&] { return "ideal: " + ideal; });
      auto back = boolean::iba_forget(bi);
      t.expect(boolean::check_gba_isomorphism(a, back, identity_map(a.size())).ok,
               [&] { return "forget(idealize(A)) is not A on labels"; });
    });
  }
  return r;
}

SuiteResult suite_equivalence(const SuiteOptions&) {
  SuiteResult r{"equivalence"};
  Tally t(r);
  // Every pointed space with at most five points, every choice of star.
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t star = 0; star < n; ++star) {
      t.run_case("space " + std::to_string(n) + "/" + std::to_string(star), [&] {
        std::vector<std::string> pts;
        for (std::size_t p = 0; p < n; ++p) pts.push_back("p" + std::to_string(p));
        auto x = boolean::make_space(pts, pts[star]);
        auto rep = boolean::equivalence_witness(x);
        t.expect(rep.complete && rep.all_verified(), [&] { return "natural maps fail on " + std::to_string(n) + " points"; });

        auto c = boolean::clopen(*x);
        auto s = boolean::stone(c);
        t.expect(boolean::find_pointed_bijection(s, *x).has_value(), [&] { return "stone(clopen(X)) is not X"; });

        auto forgotten = boolean::iba_forget(c);
        auto again = boolean::iba_forget(boolean::idealize(forgotten));
        bool exhausted = true;
        auto iso = boolean::find_gba_isomorphism(again, forgotten, 8, &exhausted);
        t.expect(iso && boolean::check_gba_isomorphism(again, forgotten, *iso).ok,
                 [&] { return "forget(idealize(A)) is not A"; });

        auto u = trunc::uc(trunc::lc(x));
        auto iso2 = boolean::find_gba_isomorphism(u, forgotten, 8, &exhausted);
        t.expect(iso2 && boolean::check_gba_isomorphism(u, forgotten, *iso2).ok,
                 [&] { return "uc(lc(X)) is not forget(clopen(X))"; });
      });
    }
  }
  return r;
}

}  // namespace trunclab::props
