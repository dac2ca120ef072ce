#include "trunclab/trunc/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "trunclab/error.hpp"

namespace trunclab::trunc {

std::int64_t is_bounded(const SimpleElement& g) {
  if (!g.is_nonnegative()) throw PreconditionError("is_bounded needs a nonnegative element");
  const Rational top = g.max_value();
  const std::int64_t n = top <= 1 ? 1 : ceil_to_int(top);
  if (!g.leq(Rational(static_cast<long>(n)) * truncate(g))) {
    throw InvariantError("bound " + std::to_string(n) + " does not dominate " + g.tuple_string());
  }
  return n;
}

BoundedAwayResult bounded_away_from_zero(const SimpleElement& g) {
  BoundedAwayResult r;
  Rational eps = clearance(g);
  if (eps == 0) return r;
  r.bounded_away = true;
  r.epsilon = eps;
  r.n = ceil_to_int(Rational(1) / eps);
  r.component_check = is_unital_component(truncate(Rational(static_cast<long>(r.n)) * g));
  return r;
}

SimpleElement restrict_to_cozero(const SimpleElement& f, const SimpleElement& g) {
  require_same_space(f, g);
  std::vector<Rational> v(f.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g[i] != 0 ? f[i] : Rational(0);
  return {f.space(), std::move(v)};
}

SimpleElement random_member(const SimpleTrunc& t, Sampler& rng, bool nonnegative) {
  SimpleElement g(t.space());
  for (auto a : t.atoms()) {
    if (rng.coin(1, 3)) continue;
    g = g + SimpleElement::indicator(t.space(), a, nonnegative ? rng.nonnegative() : rng.rational());
  }
  return g;
}

SimpleHyperResult hyperarchimedean(const SimpleTrunc& t, std::size_t budget, std::uint64_t seed) {
  if (budget == 0) throw PreconditionError("hyperarchimedean needs a positive sample budget");
  SimpleHyperResult r;
  Sampler rng(seed);
  for (std::size_t k = 0; k < budget; ++k) {
    auto f = random_member(t, rng);
    auto g = random_member(t, rng);
    auto fg = restrict_to_cozero(f, g);
    ++r.pairs_checked;
    if (!member(t, fg).member) {
      r.verdict = false;
      r.witness = std::pair{f, g};
      r.reason = "f restricted to coz g is not in the trunc";
      return r;
    }
    // k = max |f|/|g| over coz g always exists on a finite space; confirm it.
    Rational bound = 0;
    for (std::size_t i = 0; i < f.values().size(); ++i) {
      if (g[i] != 0) bound = std::max(bound, Rational(trunclab::abs(f[i]) / trunclab::abs(g[i])));
    }
    if (!abs(fg).leq(bound * abs(g))) {
      r.verdict = false;
      r.witness = std::pair{f, g};
      r.reason = "no multiple of |g| dominates f restricted to coz g";
      return r;
    }
  }
  return r;
}

YosidaResult yosida_quotient(const SpacePtr& space, const std::vector<SimpleElement>& gens) {
  for (const auto& g : gens) {
    if (!(*g.space() == *space)) throw PreconditionError("generator lives on a different space");
  }
  const std::size_t n = space->size();
  auto signature = [&](std::size_t i) {
    std::vector<Rational> s;
    for (const auto& g : gens) s.push_back(g[i]);
    return s;
  };
  std::map<std::vector<Rational>, std::size_t> class_of;
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::size_t> cls(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto sig = signature(i);
    auto [it, fresh] = class_of.emplace(sig, members.size());
    if (fresh) members.emplace_back();
    members[it->second].push_back(i);
    cls[i] = it->second;
  }
  std::vector<std::string> labels;
  for (const auto& m : members) {
    std::string l;
    for (auto i : m) l += (l.empty() ? "" : "+") + space->label(i);
    labels.push_back(l);
  }
  YosidaResult r;
  r.quotient = boolean::make_space(labels, labels[cls[space->star()]]);
  r.map = cls;
  for (const auto& g : gens) {
    std::vector<Rational> v(members.size());
    for (std::size_t c = 0; c < members.size(); ++c) v[c] = g[members[c].front()];
    r.generators.emplace_back(r.quotient, std::move(v));
  }
  r.pointed = r.map[space->star()] == r.quotient->star();
  // Separation: distinct quotient points differ on some mapped generator.
  r.separates = true;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      bool differ = std::any_of(r.generators.begin(), r.generators.end(),
                                [&](const SimpleElement& g) { return g[a] != g[b]; });
      if (!differ) r.separates = false;
    }
  }
  return r;
}

SimpleElement pointwise_sup(const std::vector<SimpleElement>& fam) {
  if (fam.empty()) throw PreconditionError("pointwise_sup of an empty family");
  SimpleElement out = fam.front();
  for (const auto& a : fam) out = join(out, a);
  return out;
}

std::vector<Rational> cut_grid(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Rational> grid;
  if (values.empty()) return {Rational(0)};
  grid.push_back(values.front() - 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    grid.push_back(values[i]);
    if (i + 1 < values.size()) grid.push_back((values[i] + values[i + 1]) / 2);
  }
  grid.push_back(values.back() + 1);
  return grid;
}

bool is_pointwise_sup(const std::vector<SimpleElement>& fam, const SimpleElement& b, Rational* bad_cut) {
  std::vector<Rational> values(b.values());
  for (const auto& a : fam) {
    require_same_space(a, b);
    values.insert(values.end(), a.values().begin(), a.values().end());
  }
  auto above = [](const SimpleElement& e, const Rational& r) {
    Subset s;
    for (std::size_t i = 0; i < e.values().size(); ++i) {
      if (e[i] > r) s = s.with(i);
    }
    return s;
  };
  for (const auto& r : cut_grid(values)) {
    Subset u;
    for (const auto& a : fam) u = u | above(a, r);
    if (u != above(b, r)) {
      if (bad_cut) *bad_cut = r;
      return false;
    }
  }
  return true;
}

std::optional<std::size_t> DiniReport::index_for(const Rational& eps) const {
  if (eps <= 0 || !uniform) return std::nullopt;
  std::size_t m = maxima.size() + 1;
  for (std::size_t k = maxima.size(); k-- > 0;) {
    if (maxima[k] < eps) {
      m = k + 1;
    } else {
      break;
    }
  }
  // The stable tail repeats the last term, so a last maximum < eps suffices.
  return m <= maxima.size() ? std::optional(m) : std::nullopt;
}

DiniReport dini_check(const std::vector<SimpleElement>& seq) {
  if (seq.empty()) throw PreconditionError("dini_check needs at least one term");
  DiniReport r;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (!seq[k].is_nonnegative()) throw PreconditionError("term " + std::to_string(k + 1) + " is negative");
    if (k > 0 && !seq[k].leq(seq[k - 1])) {
      throw PreconditionError("sequence increases at term " + std::to_string(k + 1));
    }
    r.maxima.push_back(seq[k].max_value());
  }
  r.pointwise_to_zero = seq.back().is_zero();
  // Finite spaces: the limit is reached at the stable tail, so pointwise and
  // uniform convergence coincide; we still derive uniformity from the maxima.
  r.uniform = r.maxima.back() == 0;
  return r;
}

}  // namespace trunclab::trunc
