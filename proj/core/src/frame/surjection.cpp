#include "trunclab/frame/surjection.hpp"

#include <algorithm>

#include "trunclab/error.hpp"
#include "trunclab/trunc/analysis.hpp"

namespace trunclab::frame {

namespace {

// The subposet on `elems`, with index translation from the parent.
std::pair<FramePtr, std::vector<Elem>> subframe(const FiniteFrame& f, const std::vector<Elem>& elems) {
  std::vector<Elem> index(f.size(), f.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index[elems[i]] = i;
    labels.push_back(f.label(elems[i]));
  }
  std::vector<std::pair<Elem, Elem>> covers;
  for (Elem a = 0; a < elems.size(); ++a) {
    for (Elem b = 0; b < elems.size(); ++b) {
      if (a != b && f.leq(elems[a], elems[b])) covers.emplace_back(a, b);
    }
  }
  return {std::make_shared<const FiniteFrame>(std::move(labels), covers), std::move(index)};
}

template <class Keep, class Image>
FrameQuotient quotient_onto(const FramePtr& f, Keep keep, Image image) {
  std::vector<Elem> elems;
  for (Elem x = 0; x < f->size(); ++x) {
    if (keep(x)) elems.push_back(x);
  }
  auto [target, index] = subframe(*f, elems);
  FrameQuotient q{f, target, {}};
  for (Elem x = 0; x < f->size(); ++x) q.map.push_back(index.at(image(x)));
  return q;
}

}  // namespace

FrameQuotient identity_quotient(const FramePtr& f) {
  FrameQuotient q{f, f, {}};
  for (Elem x = 0; x < f->size(); ++x) q.map.push_back(x);
  return q;
}

FrameQuotient open_quotient(const FramePtr& f, Elem a) {
  return quotient_onto(f, [&](Elem x) { return f->leq(x, a); }, [&](Elem x) { return f->meet(x, a); });
}

FrameQuotient closed_quotient(const FramePtr& f, Elem a) {
  return quotient_onto(f, [&](Elem x) { return f->leq(a, x); }, [&](Elem x) { return f->join(x, a); });
}

FrameQuotient booleanization(const FramePtr& f) {
  auto reg = [&](Elem x) { return f->pseudocomplement(f->pseudocomplement(x)); };
  return quotient_onto(f, [&](Elem x) { return reg(x) == x; }, reg);
}

FrameQuotient product_quotient(const FrameQuotient& a, const FrameQuotient& b) {
  FrameQuotient q{product(*a.source, *b.source), product(*a.target, *b.target), {}};
  const std::size_t nb = b.source->size(), tb = b.target->size();
  for (Elem i = 0; i < a.source->size(); ++i) {
    for (Elem j = 0; j < nb; ++j) q.map.push_back(a.map[i] * tb + b.map[j]);
  }
  return q;
}

SurjectionCheck FrameSurjection::check(const PointedFiniteFrame& source, const PointedFiniteFrame& target,
                                       const std::vector<Elem>& map) {
  const auto& s = source.frame();
  const auto& t = target.frame();
  auto fail = [](std::string d, std::vector<Elem> w) { return SurjectionCheck{false, std::move(d), std::move(w)}; };
  if (map.size() != s.size()) return fail("map has " + std::to_string(map.size()) + " entries", {});
  for (Elem x = 0; x < s.size(); ++x) {
    if (map[x] >= t.size()) return fail("image of " + s.label(x) + " is out of range", {x});
  }
  if (map[s.bottom()] != t.bottom()) return fail("bottom not preserved", {s.bottom()});
  if (map[s.top()] != t.top()) return fail("top not preserved", {s.top()});
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = 0; b < s.size(); ++b) {
      if (map[s.join(a, b)] != t.join(map[a], map[b])) {
        return fail("join of " + s.label(a) + " and " + s.label(b) + " not preserved", {a, b});
      }
      if (map[s.meet(a, b)] != t.meet(map[a], map[b])) {
        return fail("meet of " + s.label(a) + " and " + s.label(b) + " not preserved", {a, b});
      }
    }
  }
  std::vector<bool> hit(t.size(), false);
  for (auto y : map) hit[y] = true;
  for (Elem y = 0; y < t.size(); ++y) {
    if (!hit[y]) return fail("not surjective: " + t.label(y) + " is missed", {y});
  }
  for (Elem x = 0; x < s.size(); ++x) {
    if (target.point(map[x]) != source.point(x)) return fail("point not preserved at " + s.label(x), {x});
  }
  return {};
}

FrameSurjection::FrameSurjection(PointedPtr source, PointedPtr target, std::vector<Elem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  auto c = check(*source_, *target_, map_);
  if (!c.ok) throw InvariantError("not a pointed frame surjection: " + c.detail);
  const auto& s = source_->frame();
  const auto& t = target_->frame();
  adjoint_.assign(t.size(), s.bottom());
  for (Elem y = 0; y < t.size(); ++y) {
    for (Elem x = 0; x < s.size(); ++x) {
      if (t.leq(map_[x], y)) adjoint_[y] = s.join(adjoint_[y], x);
    }
  }
  for (Elem x = 0; x < s.size(); ++x) {
    if (x != s.bottom() && map_[x] == t.bottom()) {
      density_witness_ = x;
      break;
    }
  }
}

FrameSurjection FrameSurjection::pointed(const FrameQuotient& q, Elem target_point) {
  auto target = pointed_at(q.target, target_point);
  std::vector<bool> mask(q.source->size());
  for (Elem x = 0; x < q.source->size(); ++x) mask[x] = target->point(q.map[x]);
  auto source = std::make_shared<const PointedFiniteFrame>(q.source, std::move(mask));
  return {std::move(source), std::move(target), q.map};
}

std::vector<Interval> grid_opens(const std::vector<Rational>& values) {
  std::vector<ExtRational> ends = {ExtRational::neg_infinity()};
  for (const auto& g : trunc::cut_grid(values)) ends.emplace_back(g);
  ends.push_back(ExtRational::pos_infinity());
  std::vector<Interval> out;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) out.push_back({ends[i], ends[j]});
  }
  return out;
}

namespace {

std::vector<Rational> finite_values(const FrameReal& g) {
  std::vector<Rational> v;
  for (const auto& c : g.cells()) {
    if (c.value.is_finite()) v.push_back(c.value.value());
  }
  return v;
}

}  // namespace

DropResult drop(const FrameSurjection& q, const FrameReal& h_prime) {
  if (!(*h_prime.pointed() == *q.source())) throw PreconditionError("h' does not live on the source of q");
  const auto& t = q.target()->frame();
  DropResult r;
  r.condition = q(h_prime.eval(Interval::whole()));
  if (r.condition != t.top()) {
    r.reason = "q(h'(-inf, inf)) = " + t.label(r.condition) + ", not top";
    return r;
  }
  std::vector<Cell> cells;
  bool pointed = false;
  for (const auto& c : h_prime.cells()) {
    if (!c.value.is_finite()) {
      if (q(c.element) != t.bottom()) throw InvariantError("an infinite cell survives under q");
      continue;
    }
    cells.push_back({c.value, q(c.element)});
    if (q.target()->point(q(c.element)) && c.value == ExtRational(Rational(0))) pointed = true;
  }
  FrameReal h(q.target(), std::move(cells), pointed ? FrameReal::Kind::real : FrameReal::Kind::extended);
  r.square_verified = true;
  for (const auto& u : grid_opens(finite_values(h_prime))) {
    if (q(h_prime.eval(u)) != h.eval(u)) {
      r.square_verified = false;
      r.reason = "square fails on " + to_string(u);
      break;
    }
  }
  r.dropped = true;
  r.h = std::move(h);
  return r;
}

namespace {

// h' from source cells, accepted when it drops to exactly h.
std::optional<FrameReal> accept(const FrameSurjection& q, const FrameReal& h, const std::vector<Cell>& cells) {
  const auto& s = q.source()->frame();
  Elem total = s.bottom();
  for (const auto& c : cells) {
    if (s.meet(total, c.element) != s.bottom()) return std::nullopt;
    total = s.join(total, c.element);
  }
  if (total != s.top()) return std::nullopt;
  FrameReal hp(q.source(), cells, h.is_pointed() ? FrameReal::Kind::real : FrameReal::Kind::extended);
  auto d = drop(q, hp);
  if (!d.dropped || !d.square_verified || !(*d.h == h)) return std::nullopt;
  return hp;
}

void require_dense(const FrameSurjection& q) {
  if (!q.dense()) {
    throw PreconditionError("q is not dense: " + q.source()->frame().label(*q.density_witness()) + " maps to bottom");
  }
}

}  // namespace

std::optional<FrameReal> e0q_candidate(const FrameSurjection& q, const FrameReal& h) {
  require_dense(q);
  std::vector<Cell> cells;
  for (const auto& c : h.cells()) cells.push_back({c.value, q.adjoint(c.element)});
  return accept(q, h, cells);
}

E0qResult e0q_exhaustive(const FrameSurjection& q, const FrameReal& h, std::size_t max_source) {
  require_dense(q);
  const auto& s = q.source()->frame();
  if (s.size() > max_source) {
    throw PreconditionError("source has " + std::to_string(s.size()) + " elements, above the search bound " +
                            std::to_string(max_source));
  }
  E0qResult r;
  r.method = "exhaustive search";
  const auto comp = s.complemented_elements();
  const auto& hc = h.cells();
  std::vector<std::vector<Elem>> options(hc.size());
  for (std::size_t i = 0; i < hc.size(); ++i) {
    for (auto y : comp) {
      if (q(y) == hc[i].element) options[i].push_back(y);
    }
  }
  std::vector<Cell> chosen;
  auto search = [&](auto&& self, std::size_t i, Elem used) -> bool {
    if (i == hc.size()) {
      ++r.partitions_tried;
      if (auto hp = accept(q, h, chosen)) {
        r.witness = std::move(hp);
        return true;
      }
      return false;
    }
    for (auto y : options[i]) {
      if (s.meet(used, y) != s.bottom()) continue;
      chosen.push_back({hc[i].value, y});
      if (self(self, i + 1, s.join(used, y))) return true;
      chosen.pop_back();
    }
    return false;
  };
  r.member = search(search, 0, s.bottom());
  if (!r.member) r.reason = "no complemented partition of the source lifts h";
  return r;
}

E0qResult e0q_member(const FrameSurjection& q, const FrameReal& h, std::size_t max_source) {
  if (!(*h.pointed() == *q.target())) throw PreconditionError("h does not live on the target of q");
  if (auto hp = e0q_candidate(q, h)) {
    E0qResult r;
    r.member = true;
    r.witness = std::move(hp);
    r.method = "adjoint candidate";
    r.partitions_tried = 1;
    return r;
  }
  return e0q_exhaustive(q, h, max_source);
}

}  // namespace trunclab::frame
