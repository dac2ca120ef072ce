#include "trunclab/trunc/simple_trunc.hpp"

#include <algorithm>
#include <map>

#include "trunclab/error.hpp"

namespace trunclab::trunc {

std::vector<NormalTerm> normal_form(const SimpleElement& g) {
  std::map<Rational, Subset> levels;
  for (std::size_t i = 0; i < g.values().size(); ++i) {
    if (g[i] != 0) levels[g[i]] = levels[g[i]].with(i);
  }
  std::vector<NormalTerm> out;
  for (auto& [q, s] : levels) out.push_back({q, s});
  std::sort(out.begin(), out.end(), [](const NormalTerm& a, const NormalTerm& b) {
    return std::countr_zero(a.component.bits()) < std::countr_zero(b.component.bits());
  });
  return out;
}

SimpleElement from_normal_form(const SpacePtr& space, const std::vector<NormalTerm>& terms) {
  SimpleElement g(space);
  for (const auto& t : terms) g = g + SimpleElement::indicator(space, t.component, t.coeff);
  return g;
}

SimpleTrunc::SimpleTrunc(SpacePtr space, std::vector<Subset> family) : space_(std::move(space)) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  for (auto s : family) {
    if (s.contains(space_->star())) {
      throw InvariantError("component " + space_->format(s) + " contains the star");
    }
    if (!s.subset_of(space_->all())) throw InvariantError("component outside the space");
  }
  family_ = std::move(family);
  if (!has_component(Subset())) throw InvariantError("family is missing {} (the empty set)");
  for (auto a : family_) {
    for (auto b : family_) {
      const std::pair<Subset, const char*> results[] = {{a | b, "union"}, {a & b, "intersect"}, {a - b, "minus"}};
      for (auto [s, op] : results) {
        if (!has_component(s)) {
          throw InvariantError("family not closed: " + space_->format(a) + " " + op + " " + space_->format(b) +
                               " = " + space_->format(s) + " is missing");
        }
      }
    }
  }
}

bool SimpleTrunc::has_component(Subset s) const { return std::binary_search(family_.begin(), family_.end(), s); }

std::vector<Subset> SimpleTrunc::atoms() const {
  std::vector<Subset> out;
  for (auto s : family_) {
    if (s.empty()) continue;
    bool minimal = std::none_of(family_.begin(), family_.end(),
                                [&](Subset t) { return !t.empty() && t != s && t.subset_of(s); });
    if (minimal) out.push_back(s);
  }
  return out;
}

SimpleTrunc lc(const SpacePtr& space, std::optional<std::vector<Subset>> family) {
  if (family) return {space, std::move(*family)};
  const Subset base = space->non_star();
  std::vector<Subset> all;
  // Enumerate subsets of base by the standard submask walk.
  for (std::uint64_t m = base.bits();; m = (m - 1) & base.bits()) {
    all.emplace_back(m);
    if (m == 0) break;
  }
  return {space, std::move(all)};
}

boolean::GeneralizedBooleanAlgebra uc(const SimpleTrunc& g) {
  return boolean::GeneralizedBooleanAlgebra::from_family(g.family(),
                                                         [&](Subset s) { return g.space()->format(s); });
}

Membership member(const SimpleTrunc& g, const SimpleElement& e) {
  if (!(*g.space() == *e.space())) throw PreconditionError("element and trunc live on different spaces");
  Membership m;
  m.normal_form = normal_form(e);
  for (const auto& t : m.normal_form) {
    if (!g.has_component(t.component)) {
      m.offending_level_set = t.component;
      m.normal_form.clear();
      return m;
    }
  }
  m.member = true;
  return m;
}

bool is_unital_component(const SimpleElement& u) {
  if (!u.is_nonnegative()) throw PreconditionError("unital-component test needs a nonnegative element");
  return truncate(Rational(2) * u) == u;
}

Rational clearance(const SimpleElement& g) {
  if (!g.is_nonnegative()) throw PreconditionError("clearance needs a nonnegative element");
  auto vals = g.nonzero_values();
  return vals.empty() ? Rational(0) : vals.front();
}

ClearanceStep clearance_step(const SimpleElement& g) {
  if (!g.is_nonnegative() || g.is_zero()) throw PreconditionError("clearance_step needs g > 0");
  if (!(truncate(g) == g)) throw PreconditionError("clearance_step needs g = truncate(g)");
  const auto& space = g.space();
  Rational delta = clearance(g);
  auto w = SimpleElement::indicator(space, tminus(g, delta).support());
  auto u = SimpleElement::indicator(space, g.support()) - w;
  auto rest = meet(g, w);
  return {std::move(rest), std::move(u), std::move(delta)};
}

}  // namespace trunclab::trunc
