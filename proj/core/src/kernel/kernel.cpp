#include "trunclab/kernel/kernel.hpp"

#include <algorithm>

#include "trunclab/error.hpp"
#include "trunclab/trunc/analysis.hpp"
#include "trunclab/trunc/sequences.hpp"

namespace trunclab::kernel {

using seq::TailElement;
using trunc::SimpleElement;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string set_string(const std::set<std::int64_t>& s) {
  std::string out = "{";
  for (auto n : s) out += (out.size() > 1 ? "," : "") + std::to_string(n);
  return out + "}";
}

// Least n >= 1 with 1/n strictly below the clearance, so supp(g tminus 1/n) = supp g.
Rational tminus_level(const Rational& clr) { return Rational(1, static_cast<unsigned long>(floor_to_int(1 / clr) + 1)); }

}  // namespace

SimpleKernel::SimpleKernel(trunc::SimpleTrunc model, Subset support) : model_(std::move(model)) {
  if (support.contains(model_.space()->star())) throw InvariantError("kernel support contains the star");
  for (auto a : model_.atoms()) {
    if (a.subset_of(support)) support_ = support_ | a;
  }
}

bool SimpleKernel::contains(const SimpleElement& g) const {
  return g.support().subset_of(support_) && trunc::member(model_, g).member;
}

std::string SimpleKernel::describe() const { return "supp in " + model_.space()->format(support_); }

SeqKernel::SeqKernel(seq::SeqTrunc model, std::optional<std::set<std::int64_t>> support, std::size_t min_order)
    : model_(model), support_(std::move(support)), min_order_(min_order) {
  if (min_order_ < 1 || min_order_ > model_.degree() + 1) {
    throw InvariantError("least tail order must lie in [1, " + std::to_string(model_.degree() + 1) + "]");
  }
  if (support_) {
    if (!support_->empty() && *support_->begin() < 1) throw InvariantError("support points start at 1");
    if (allows_tail()) throw InvariantError("a finite support forces a zero tail");
  }
}

SeqKernel SeqKernel::from_flags(seq::SeqTrunc model, std::optional<std::set<std::int64_t>> support,
                                const std::vector<bool>& tail_allowed) {
  if (tail_allowed.size() != model.degree()) {
    throw InvariantError("expected " + std::to_string(model.degree()) + " tail flags, got " +
                         std::to_string(tail_allowed.size()));
  }
  std::size_t min_order = model.degree() + 1;
  for (std::size_t k = tail_allowed.size(); k-- > 0;) {
    if (tail_allowed[k]) {
      if (min_order != k + 2) throw InvariantError("tail flags must be upward closed (slot " + std::to_string(k + 1) + ")");
      min_order = k + 1;
    }
  }
  return {model, std::move(support), min_order};
}

bool SeqKernel::contains(const TailElement& g) const {
  if (!model_.contains(g)) return false;
  if (support_) {
    if (!g.tail_zero()) return false;
    auto s = g.finite_support();
    return std::includes(support_->begin(), support_->end(), s.begin(), s.end());
  }
  return g.tail_zero() || *g.leading_order() >= min_order_;
}

std::string SeqKernel::describe() const {
  if (model_.is_zero_trunc()) return "{0}";
  if (support_) return "supp in " + set_string(*support_);
  if (min_order_ == 1) return "whole trunc";
  if (!allows_tail()) return "tail 0";
  return "tail order >= " + std::to_string(min_order_);
}

std::string describe(const KernelSpec& k) {
  return std::visit([](const auto& x) { return x.describe(); }, k);
}

bool archimedean_premise(const SimpleKernel& k, const SimpleElement& g, const SimpleElement& /*h*/) {
  // (n g - h)+ at x grows without bound in n exactly when g(x) > 0, whatever h is;
  // so the premise says g vanishes off the support.
  return g.support().subset_of(k.support());
}

bool archimedean_premise(const SeqKernel& k, const TailElement& g, const TailElement& h) {
  if (k.support()) {
    // Same argument as for finite spaces: every point where g > 0 eventually
    // enters supp (n g - h)+.
    return k.contains(g);
  }
  // Membership of (n g - h)+ only depends on the tail of n g - h. Each tail
  // coordinate n g_k - h_k has a fixed sign once n > |h_k| / |g_k|; beyond that
  // the verdict is constant, and below it follows by convexity since
  // (n g - h)+ increases with n.
  std::int64_t m = 1;
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (g.tail()[i] == 0) continue;
    const Rational hk = i < h.degree() ? h.tail()[i] : Rational(0);
    m = std::max(m, floor_to_int(trunclab::abs(hk) / trunclab::abs(g.tail()[i])) + 1);
  }
  const TailElement x = join(Rational(m) * g - h, TailElement());
  return k.contains(x);
}

bool tminus_premise(const SimpleKernel& k, const SimpleElement& g) {
  if (g.is_zero()) return true;
  return k.contains(trunc::tminus(g, tminus_level(trunc::clearance(g))));
}

bool tminus_premise(const SeqKernel& k, const TailElement& g) {
  if (g.tail_zero()) {
    if (g.is_zero()) return true;
    Rational clr = 0;
    for (auto n : g.finite_support()) {
      if (clr == 0 || g.value(n) < clr) clr = g.value(n);
    }
    return k.contains(tminus(g, tminus_level(clr)));
  }
  // Every g tminus 1/n is finitely supported, and the supports exhaust the
  // (infinite) support of g. A finite kernel support cannot hold them all; a
  // kernel over all points holds every finitely supported element.
  return !k.support().has_value();
}

namespace {

// A refutation carries a checked witness, so it is exact.
ConditionVerdict& fail(ConditionVerdict& v, std::string witness) {
  v.pass = false;
  v.exact = true;
  v.witness = std::move(witness);
  return v;
}

KernelConditions conditions_simple(const SimpleKernel& k, std::size_t budget, std::uint64_t seed) {
  KernelConditions r;
  const auto& model = k.model();
  const auto& space = model.space();
  std::vector<SimpleElement> gs;
  SimpleElement all(space);
  for (auto a : model.atoms()) {
    gs.push_back(SimpleElement::indicator(space, a));
    all = all + gs.back();
  }
  gs.push_back(all);
  Sampler rng(seed);
  for (std::size_t s = 0; s < budget; ++s) gs.push_back(trunc::random_member(model, rng, true));

  for (const auto& g : gs) {
    const std::vector<SimpleElement> hs = {SimpleElement(space), all, g, trunc::random_member(model, rng, true)};
    for (const auto& h : hs) {
      ++r.archimedean.samples;
      if (r.archimedean.pass && archimedean_premise(k, g, h) && !k.contains(g)) {
        fail(r.archimedean, "g = " + g.tuple_string() + ", h = " + h.tuple_string());
      }
    }
    ++r.truncation.samples;
    if (r.truncation.pass && k.contains(trunc::truncate(g)) && !k.contains(g)) fail(r.truncation, g.tuple_string());
    ++r.tminus.samples;
    if (r.tminus.pass && tminus_premise(k, g) && !k.contains(g)) fail(r.tminus, g.tuple_string());
  }
  // Support kernels: all three premises and the conclusion depend only on
  // supp g, a union of atoms, and every atom was tested.
  r.archimedean.exact = r.truncation.exact = r.tminus.exact = true;
  return r;
}

std::vector<TailElement> seq_structured(const SeqKernel& k) {
  std::vector<TailElement> out;
  const auto& model = k.model();
  if (model.is_zero_trunc()) return {TailElement()};
  for (std::size_t j = 1; j <= model.degree(); ++j) out.push_back(TailElement::monomial(j));
  const std::int64_t outside = k.support() && !k.support()->empty() ? *k.support()->rbegin() + 1 : 1;
  out.push_back(TailElement::indicator({outside}));
  if (k.support()) {
    for (auto n : *k.support()) out.push_back(TailElement::indicator({n}));
  }
  return out;
}

KernelConditions conditions_seq(const SeqKernel& k, std::size_t budget, std::uint64_t seed) {
  KernelConditions r;
  const auto& model = k.model();
  std::vector<TailElement> gs = seq_structured(k);
  Sampler rng(seed);
  for (std::size_t s = 0; s < budget; ++s) gs.push_back(model.sample(rng, true));

  std::vector<TailElement> base_hs = {TailElement()};
  if (!model.is_zero_trunc()) {
    for (std::size_t j = 1; j <= model.degree(); ++j) base_hs.push_back(TailElement::monomial(j));
  }
  for (const auto& g : gs) {
    auto hs = base_hs;
    hs.push_back(g);
    hs.push_back(Rational(2) * g);
    hs.push_back(model.sample(rng, true));
    for (const auto& h : hs) {
      ++r.archimedean.samples;
      if (r.archimedean.pass && archimedean_premise(k, g, h) && !k.contains(g)) {
        fail(r.archimedean, "g = " + g.to_string() + ", h = " + h.to_string()).tail_witness = g;
      }
    }
    ++r.truncation.samples;
    if (r.truncation.pass && k.contains(truncate(g)) && !k.contains(g)) {
      fail(r.truncation, g.to_string()).tail_witness = g;
    }
    ++r.tminus.samples;
    if (r.tminus.pass && tminus_premise(k, g) && !k.contains(g)) fail(r.tminus, g.to_string()).tail_witness = g;
  }
  // (3) in closed form: over all points, every g tminus 1/n is finitely
  // supported and so in K; the condition then holds iff K has every tail,
  // and the least missing monomial n^-(j0-1) is among the structured cases.
  const bool predicted = model.is_zero_trunc() || k.support().has_value() || k.min_order() == 1;
  if (predicted != r.tminus.pass) throw InvariantError("condition (3): samples disagree with the closed form");
  r.tminus.exact = true;
  return r;
}

}  // namespace

KernelConditions kernel_conditions(const KernelSpec& k, std::size_t budget, std::uint64_t seed) {
  return std::visit(overloaded{[&](const SimpleKernel& s) { return conditions_simple(s, budget, seed); },
                               [&](const SeqKernel& s) { return conditions_seq(s, budget, seed); }},
                    k);
}

namespace {

SimpleKernel close_step(const SimpleKernel& cur, std::size_t rule) {
  const auto& model = cur.model();
  const auto& space = model.space();
  const auto atoms = model.atoms();
  Subset next = cur.support();
  for (auto a : atoms) {
    if (a.subset_of(cur.support())) continue;
    const auto g = SimpleElement::indicator(space, a);
    bool qualifies = false;
    if (rule == 0) {
      qualifies = tminus_premise(cur, g);
    } else if (rule == 1) {
      std::vector<SimpleElement> hs = {SimpleElement(space)};
      for (auto b : atoms) hs.push_back(SimpleElement::indicator(space, b));
      qualifies = std::any_of(hs.begin(), hs.end(), [&](const SimpleElement& h) { return archimedean_premise(cur, g, h); });
    } else {
      qualifies = cur.contains(trunc::truncate(g));
    }
    if (qualifies) next = next | a;
  }
  return {model, next};
}

SeqKernel close_step(const SeqKernel& cur, std::size_t rule) {
  const auto& model = cur.model();
  if (model.is_zero_trunc()) return cur;
  auto qualifies = [&](const TailElement& g) {
    if (rule == 0) return tminus_premise(cur, g);
    if (rule == 1) {
      std::vector<TailElement> hs = {TailElement()};
      for (std::size_t j = 1; j <= model.degree(); ++j) hs.push_back(TailElement::monomial(j));
      for (const auto& h : hs) {
        if (archimedean_premise(cur, g, h)) return true;
      }
      return false;
    }
    return cur.contains(truncate(g));
  };
  std::optional<std::set<std::int64_t>> support = cur.support();
  std::size_t min_order = cur.min_order();
  for (std::size_t j = 1; j < cur.min_order(); ++j) {
    if (qualifies(TailElement::monomial(j))) {
      min_order = std::min(min_order, j);
    }
  }
  if (support) {
    // Points outside a finite support are interchangeable; test one.
    const std::int64_t outside = support->empty() ? 1 : *support->rbegin() + 1;
    if (qualifies(TailElement::indicator({outside}))) support.reset();
  }
  // A tail has infinite support, so convex generation brings in every point.
  if (min_order <= model.degree()) support.reset();
  return {model, support, min_order};
}

template <class K>
ClosureResult close(const K& start, std::size_t budget, std::uint64_t seed) {
  ClosureResult r{start, 0, false, {}, false};
  std::vector<K> history = {start};
  r.stages.push_back(start.describe());
  for (std::size_t alpha = 0; alpha < closure_round_bound; ++alpha) {
    history.push_back(close_step(history.back(), alpha % 3));
    r.stages.push_back(history.back().describe());
    const auto n = history.size();
    if (n >= 3 && history[n - 3] == history[n - 2] && history[n - 2] == history[n - 1]) {
      r.converged = true;
      r.rounds = n - 3;
      r.stages.resize(n - 2);
      break;
    }
  }
  r.closed = history.back();
  r.conditions_pass = kernel_conditions(r.closed, budget, seed).all_pass();
  return r;
}

}  // namespace

ClosureResult kernel_closure(const KernelSpec& k, std::size_t check_budget, std::uint64_t seed) {
  return std::visit([&](const auto& x) { return close(x, check_budget, seed); }, k);
}

bool filtration_sup_check(const TailElement& g, const std::vector<Rational>& cuts) {
  for (const auto& r : cuts) {
    const auto target = seq::above(g, r);
    const std::int64_t reach = target.bound + 1;
    seq::SeqOpen u;
    for (std::int64_t n = 1; n <= reach; ++n) u = seq::unite(u, seq::above(seq::restrict_to_prefix(g, n), r));
    // Past `reach`, x lies in {h_x > r} iff g(x) > r for r >= 0 (h_x agrees with g
    // at x), which is target.cofinite; for r < 0 every h_n is above r everywhere.
    seq::SeqOpen w;
    w.bound = std::max(u.bound, reach);
    for (std::int64_t n = 1; n < w.bound; ++n) {
      if (u.contains(n)) w.points.insert(n);
    }
    w.cofinite = r < 0 || target.cofinite;
    w.omega = u.omega;
    w.canonicalize();
    if (!(w == target)) return false;
  }
  return true;
}

namespace {

std::vector<Rational> seq_cuts(const TailElement& g) {
  std::vector<Rational> vals = {Rational(0)};
  const auto upto = std::max<std::int64_t>(g.crossover(), 8);
  for (std::int64_t n = 1; n <= upto; ++n) vals.push_back(g.value(n));
  return trunc::cut_grid(vals);
}

PointwiseClosure pointwise_simple(const SimpleKernel& k, std::size_t budget, std::uint64_t seed) {
  PointwiseClosure r;
  const auto& model = k.model();
  const auto& space = model.space();
  std::vector<SimpleElement> gs;
  for (auto a : model.atoms()) gs.push_back(SimpleElement::indicator(space, a));
  Sampler rng(seed);
  for (std::size_t s = 0; s < budget; ++s) gs.push_back(trunc::random_member(model, rng, true));

  for (const auto& g : gs) {
    ++r.candidates;
    if (k.contains(g)) continue;
    std::vector<std::pair<std::string, std::vector<SimpleElement>>> families;
    std::vector<SimpleElement> filtration;
    Subset prefix;
    for (std::size_t i = 0; i < space->size(); ++i) {
      if (i == space->star()) continue;
      prefix = prefix.with(i);
      std::vector<Rational> v(space->size());
      for (auto j : prefix.indices()) v[j] = g[j];
      filtration.emplace_back(space, v);
    }
    families.emplace_back("support filtration", std::move(filtration));
    std::vector<SimpleElement> shaved;
    const auto top = floor_to_int(1 / trunc::clearance(g)) + 1;
    for (std::int64_t n = 1; n <= top; ++n) shaved.push_back(trunc::tminus(g, Rational(1, static_cast<unsigned long>(n))));
    families.emplace_back("tminus 1/n", std::move(shaved));
    families.emplace_back("truncation sequence", trunc::truncation_sequence(g));
    for (const auto& [name, fam] : families) {
      const bool inside = std::all_of(fam.begin(), fam.end(), [&](const SimpleElement& e) {
        return member(model, e).member && k.contains(e);
      });
      if (inside && trunc::is_pointwise_sup(fam, g)) {
        r.closed = false;
        r.family = name;
        r.witness = g.tuple_string();
        return r;
      }
    }
  }
  return r;
}

PointwiseClosure pointwise_seq(const SeqKernel& k, std::size_t budget, std::uint64_t seed) {
  PointwiseClosure r;
  const auto& model = k.model();
  std::vector<TailElement> gs = seq_structured(k);
  Sampler rng(seed);
  for (std::size_t s = 0; s < budget; ++s) gs.push_back(model.sample(rng, true));

  for (const auto& g : gs) {
    ++r.candidates;
    if (k.contains(g) || !model.contains(g)) continue;
    const auto cuts = seq_cuts(g);
    // Support filtration g * chi{1..n}: finitely supported members. They all
    // lie in K iff K takes every finitely supported element below g, i.e. K
    // is over all points or supp g is inside the kernel support.
    {
      bool inside;
      if (!k.support()) {
        inside = true;
      } else {
        inside = g.tail_zero();
        if (inside) {
          auto s = g.finite_support();
          inside = std::includes(k.support()->begin(), k.support()->end(), s.begin(), s.end());
        }
      }
      for (std::int64_t n = 1; n <= 4 && inside; ++n) {
        if (!k.contains(seq::restrict_to_prefix(g, n))) throw InvariantError("filtration member escaped K");
      }
      if (inside && filtration_sup_check(g, cuts)) {
        r.closed = false;
        r.family = "support filtration g * chi{1..n}";
        r.witness = g.to_string();
        r.tail_witness = g;
        return r;
      }
    }
    // g tminus 1/n: finitely supported with supports exhausting supp g, so
    // membership is the same as for the filtration; the sup check is the
    // same cut argument and is covered above.
    // Truncation sequence and good partial sums: g truncN n keeps the tail and
    // support of g, and g <= max(1, sup g) * (g truncN 1), so by convexity the
    // members lie in K iff g does. g is outside K here.
  }
  return r;
}

}  // namespace

PointwiseClosure pointwise_closed(const KernelSpec& k, std::size_t budget, std::uint64_t seed) {
  auto r = std::visit(overloaded{[&](const SimpleKernel& s) { return pointwise_simple(s, budget, seed); },
                                 [&](const SeqKernel& s) { return pointwise_seq(s, budget, seed); }},
                      k);
  r.agrees_with_conditions = r.closed == kernel_conditions(k, budget, seed).all_pass();
  return r;
}

}  // namespace trunclab::kernel
