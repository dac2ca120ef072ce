#include <algorithm>

#include "models.hpp"
#include "tally.hpp"
#include "trunclab/error.hpp"
#include "trunclab/props/generators.hpp"
#include "trunclab/props/oracles.hpp"

namespace trunclab::props {

namespace {

using frame::Elem;
using frame::FrameReal;

std::vector<Rational> finite_values(const FrameReal& g) {
  std::vector<Rational> v;
  for (const auto& c : g.cells()) {
    if (c.value.is_finite()) v.push_back(c.value.value());
  }
  return v;
}

void compare_with_grid(Tally& t, const Op& op, std::span<const FrameReal> xs) {
  const auto res = frame::induced_op(op, xs);
  for (const auto& row : grid_formula(op, xs)) {
    const auto got = res.eval(row.v);
    t.expect(got == row.value, [&] {
      std::string ops;
      for (const auto& x : xs) ops += " " + x.to_string();
      return to_string(op) + " on" + ops + " at " + frame::to_string(row.v) + ": cells give " +
             res.frame().label(got) + ", formula gives " + res.frame().label(row.value);
    });
  }
}

// Least m with g_n(-inf, eps) = top for all n >= m, the last term repeating.
std::optional<std::size_t> brute_index(const std::vector<FrameReal>& seq, const Rational& eps) {
  for (std::size_t m = 1; m <= seq.size(); ++m) {
    bool all = true;
    for (std::size_t n = m; n <= seq.size(); ++n) all = all && seq[n - 1].lower(eps) == seq[0].frame().top();
    if (all) return m;
  }
  return std::nullopt;
}

Rational brute_tail_sup(const seq::TailElement& g, std::int64_t after) {
  Rational s = 0;
  for (std::int64_t n = after + 1; n <= after + 500; ++n) s = std::max(s, g.value(n));
  return s;
}

void check_drop(Tally& t, const frame::FrameSurjection& q, const FrameReal& hp, const std::string& label) {
  const auto d = frame::drop(q, hp);
  const bool cond = brute_drop_condition(q, hp);
  t.expect(d.dropped == cond, [&] { return label + ": drop verdict disagrees with the cell condition"; });
  if (d.dropped) {
    t.expect(d.square_verified, [&] { return label + ": square not verified: " + d.reason; });
    bool square = true;
    for (const auto& u : full_grid(finite_values(hp))) square = square && q(hp.eval(u)) == d.h->eval(u);
    t.expect(square, [&] { return label + ": q h'(U) != h(U) on the grid"; });
  }
  if (q.dense() && cond) {
    t.expect(hp.is_finite(), [&] { return label + ": dense q with an infinite cell that drops"; });
  }
}

}  // namespace

SuiteResult suite_frame_ops(const SuiteOptions& o) {
  SuiteResult r{"frame-ops"};
  Tally t(r);
  for (std::size_t i = 0; i < o.cases; ++i) {
    auto rng = case_rng(o, i);
    t.run_case(case_label(i), [&] {
      auto p = random_pointed(random_frame(rng, 20), rng);
      const FrameReal signed_pair[] = {random_frame_real(p, rng), random_frame_real(p, rng)};
      const FrameReal positive_pair[] = {random_frame_real(p, rng, true), random_frame_real(p, rng, true)};
      std::span<const FrameReal> s2(signed_pair), p2(positive_pair);
      Rational q = rng.rational(5, 3);
      compare_with_grid(t, Op::add(), s2);
      compare_with_grid(t, Op::negate(), s2.first(1));
      compare_with_grid(t, Op::scale(q), s2.first(1));
      compare_with_grid(t, Op::meet(), s2);
      compare_with_grid(t, Op::join(), s2);
      compare_with_grid(t, Op::truncate(), p2.first(1));
      compare_with_grid(t, Op::tminus(rng.nonnegative(4, 3)), p2.first(1));
      compare_with_grid(t, Op::truncN(rng.positive(4, 3)), p2.first(1));
    });
  }
  return r;
}

SuiteResult suite_case_tables(const SuiteOptions& o) {
  SuiteResult r{"case-tables"};
  Tally t(r);
  for (std::size_t i = 0; i < o.cases; ++i) {
    auto rng = case_rng(o, i);
    t.run_case(case_label(i), [&] {
      auto p = random_pointed(random_frame(rng, 20), rng);
      auto g = random_frame_real(p, rng, true);
      const auto tr = ap(Op::truncate(), g);
      const auto tm = ap(Op::tminus(1), g);
      // Random thresholds plus the ones sitting on case boundaries.
      std::vector<Rational> rs = {0, 1, -1, rng.rational(8, 4), rng.rational(8, 4)};
      for (const auto& v : finite_values(g)) {
        for (const auto& d : {Rational(-1), Rational(0), Rational(1), Rational(1, 2)}) rs.push_back(v + d);
      }
      for (const auto& x : rs) {
        t.expect(tr.lower(x) == truncate_below_case(g, x), [&] { return "truncate below " + to_string(x) + " for " + g.to_string(); });
        t.expect(tr.upper(x) == truncate_above_case(g, x), [&] { return "truncate above " + to_string(x) + " for " + g.to_string(); });
        t.expect(tm.lower(x) == tminus_one_below_case(g, x), [&] { return "tminus below " + to_string(x) + " for " + g.to_string(); });
        t.expect(tm.upper(x) == tminus_one_above_case(g, x), [&] { return "tminus above " + to_string(x) + " for " + g.to_string(); });
      }
    });
  }
  return r;
}

SuiteResult suite_dini(const SuiteOptions& o) {
  SuiteResult r{"dini"};
  Tally t(r);
  for (std::size_t i = 0; i < o.cases; ++i) {
    auto rng = case_rng(o, i);
    t.run_case(case_label(i) + " frame", [&] {
      auto p = random_pointed(random_frame(rng, 20), rng);
      std::vector<FrameReal> seq = {random_frame_real(p, rng, true)};
      for (auto k = rng.uniform(1, 5); k > 0; --k) {
        seq.push_back(ap(Op::meet(), seq.back(), random_frame_real(p, rng, true)));
      }
      if (rng.coin(2, 3)) seq.push_back(FrameReal::zero(p));
      auto d = frame::frame_dini(seq);
      const bool to_zero = is_zero_elem(seq.back());
      t.expect(d.pointwise_to_zero == to_zero, [&] { return "pointwise verdict wrong"; });
      t.expect(!to_zero || d.uniform, [&] { return "pointwise to zero but not uniform"; });
      std::vector<Rational> eps = {Rational(1, 1000), rng.positive(6, 5)};
      for (const auto& g : seq) {
        for (const auto& v : finite_values(g)) {
          if (v > 0) eps.push_back(v);
        }
      }
      for (const auto& e : eps) {
        t.expect(d.index_for(e) == brute_index(seq, e), [&] { return "index_for(" + to_string(e) + ") wrong"; });
      }
    });
    t.run_case(case_label(i) + " tail", [&] {
      seq::SeqTrunc tr(static_cast<std::size_t>(rng.uniform(1, 2)));
      auto g = tr.sample(rng, true);
      const auto terms = rng.uniform(3, 12);
      auto d = seq::dini_prefix_family(g, terms);
      t.expect(d.pointwise_to_zero && d.uniform, [&] { return "prefix family not uniform for " + g.to_string(); });
      bool sups = d.suprema.size() == static_cast<std::size_t>(terms);
      for (std::int64_t m = 1; sups && m <= terms; ++m) sups = d.suprema[m - 1] == brute_tail_sup(g, m);
      t.expect(sups, [&] { return "suprema wrong for " + g.to_string(); });
      for (const auto& e : {Rational(1, 2), Rational(1, 10), rng.positive(3, 20)}) {
        std::int64_t m = 1;
        while (brute_tail_sup(g, m) >= e && m < 100000) ++m;
        t.expect(d.index_for(e) == m, [&] { return "index_for(" + to_string(e) + ") wrong for " + g.to_string(); });
      }
    });
  }
  return r;
}

SuiteResult suite_drop_e0q(const SuiteOptions& o) {
  SuiteResult r{"drop-e0q"};
  Tally t(r);
  // Named examples: the Booleanization of the three-element chain and its
  // product with the two-element frame.
  auto c3 = frame::chain({"bot", "m", "top"});
  auto f2 = frame::chain({"0", "1"});
  const frame::FrameSurjection named[] = {
      frame::FrameSurjection::pointed(frame::booleanization(c3), 1),
      frame::FrameSurjection::pointed(
          frame::product_quotient(frame::booleanization(c3), frame::identity_quotient(f2)), 1),
  };
  for (std::size_t e = 0; e < 2; ++e) {
    for (std::size_t i = 0; i < 8; ++i) {
      auto rng = case_rng(o, i, 17 + e);
      t.run_case("named example " + std::to_string(e), [&] {
        const auto& q = named[e];
        check_drop(t, q, random_extended_real(q.source(), rng), "named example");
        auto h = random_frame_real(q.target(), rng);
        auto m = frame::e0q_member(q, h);
        t.expect(m.member == brute_e0q(q, h).has_value(), [&] { return "e0q disagrees on the named example"; });
      });
    }
  }
  for (std::size_t i = 0; i < o.cases; ++i) {
    auto rng = case_rng(o, i);
    t.run_case(case_label(i) + " drop", [&] {
      auto q = random_surjection(rng, 20);
      auto hp = rng.coin() ? random_extended_real(q.source(), rng) : random_frame_real(q.source(), rng);
      check_drop(t, q, hp, case_label(i));
    });
    t.run_case(case_label(i) + " e0q", [&] {
      auto q = random_surjection(rng, 12);
      auto h = random_frame_real(q.target(), rng);
      if (!q.dense()) {
        bool refused = false;
        try {
          frame::e0q_member(q, h);
        } catch (const PreconditionError&) {
          refused = true;
        }
        t.expect(refused, [&] { return "e0q accepted a non-dense surjection"; });
        return;
      }
      const bool brute = brute_e0q(q, h).has_value();
      t.expect(frame::e0q_candidate(q, h).has_value() == brute,
               [&] { return "adjoint candidate disagrees with enumeration for " + h.to_string(); });
      t.expect(frame::e0q_exhaustive(q, h).member == brute,
               [&] { return "partition search disagrees with enumeration for " + h.to_string(); });
    });
  }
  return r;
}

SuiteResult suite_galois_uc(const SuiteOptions& o) {
  SuiteResult r{"galois-uc"};
  Tally t(r);
  for (std::size_t i = 0; i < o.cases; ++i) {
    auto rng = case_rng(o, i);
    t.run_case(case_label(i), [&] {
      auto q = random_surjection(rng, 20);
      const auto& s = q.source()->frame();
      const auto& tg = q.target()->frame();
      for (Elem x = 0; x < s.size(); ++x) {
        for (Elem y = 0; y < tg.size(); ++y) {
          t.expect(tg.leq(q(x), y) == s.leq(x, q.adjoint(y)),
                   [&] { return "Galois law fails at " + s.label(x) + ", " + tg.label(y); });
        }
      }
      auto p = q.source();
      for (auto x : s.complemented_elements()) {
        if (p->point(x)) continue;
        auto u = frame::frame_uc_check(frame::chi(p, x));
        t.expect(u.unital && u.witness == x, [&] { return "chi(" + s.label(x) + ") not recognised as unital"; });
      }
      auto g = random_frame_real(p, rng, true, 2);
      if (rng.coin()) g = ap(Op::truncate(), g);
      auto u = frame::frame_uc_check(g);
      const bool zero_one = std::all_of(g.cells().begin(), g.cells().end(),
                                        [](const frame::Cell& c) { return c.value == ExtRational(0) || c.value == ExtRational(1); });
      t.expect(u.unital == zero_one, [&] { return "unital verdict wrong for " + g.to_string(); });
      if (u.unital) t.expect(frame::chi(p, *u.witness) == g, [&] { return "cozero does not rebuild " + g.to_string(); });
      auto oq = frame::open_quotient(p->frame_ptr(), g.eval(frame::Interval::whole()));
      bool identity = oq.target->size() == s.size();
      for (Elem x = 0; identity && x < s.size(); ++x) identity = oq.map[x] == x;
      t.expect(identity, [&] { return "open quotient at g(-inf, inf) is not the identity"; });
    });
  }
  return r;
}

}  // namespace trunclab::props
