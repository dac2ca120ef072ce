#include "trunclab/props/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "trunclab/props/generators.hpp"

namespace trunclab::props {

namespace {

using frame::Elem;
using frame::FrameReal;
using frame::Interval;

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Values, midpoints, and one past each end.
std::vector<Rational> cuts(const std::vector<Rational>& values) {
  auto v = sorted_unique(values);
  if (v.empty()) return {Rational(0)};
  std::vector<Rational> out = {v.front() - 1};
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(v[i]);
    if (i + 1 < v.size()) out.push_back((v[i] + v[i + 1]) / 2);
  }
  out.push_back(v.back() + 1);
  return out;
}

std::vector<Interval> intervals(const std::vector<ExtRational>& ends) {
  std::vector<Interval> out;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) out.push_back({ends[i], ends[j]});
  }
  return out;
}

std::vector<ExtRational> with_infinities(const std::vector<Rational>& finite) {
  std::vector<ExtRational> e = {ExtRational::neg_infinity()};
  for (const auto& x : finite) e.emplace_back(x);
  e.push_back(ExtRational::pos_infinity());
  return e;
}

std::vector<Rational> finite_values(const FrameReal& g) {
  std::vector<Rational> v;
  for (const auto& c : g.cells()) v.push_back(c.value.value());
  return v;
}

Rational min_gap(const std::vector<Rational>& sorted) {
  Rational gap = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i) gap = std::min(gap, Rational(sorted[i] - sorted[i - 1]));
  return gap;
}

// An end approached from inside an interval: from above for a lower end,
// from below for an upper end.
struct Approach {
  ExtRational end;
  bool from_above;
  Rational at(const Rational& t) const {
    if (end.is_finite()) return from_above ? Rational(end.value() + t) : Rational(end.value() - t);
    return end == ExtRational::neg_infinity() ? Rational(-1 / t) : Rational(1 / t);
  }
};

struct Limit {
  ExtRational value;
  bool attained = false;
};

// Along the path t -> 0+ every coordinate is affine in t or in 1/t and the op
// stays on one linear piece, so w = A + B t + C / t there.
Limit path_limit(const Op& op, const std::vector<Approach>& path, const Rational& eps) {
  Rational f[3];
  Rational t = eps;
  for (auto& fi : f) {
    std::vector<Rational> args;
    for (const auto& a : path) args.push_back(a.at(t));
    fi = apply_scalar(op, args);
    t /= 2;
  }
  if (f[0] == f[1] && f[1] == f[2]) return {f[0], true};
  const Rational c = eps * (2 * f[2] - 3 * f[1] + f[0]) / 3;
  if (c > 0) return {ExtRational::pos_infinity(), false};
  if (c < 0) return {ExtRational::neg_infinity(), false};
  const Rational b = 2 * (f[0] - f[1]) / eps;
  return {Rational(f[0] - b * eps), false};
}

}  // namespace

std::vector<GridRow> grid_formula(const Op& op, std::span<const FrameReal> xs) {
  const std::size_t k = xs.size();
  const auto& f = xs[0].frame();

  // Output grid.
  std::vector<Rational> outputs;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<Rational> args;
    for (std::size_t i = 0; i < k; ++i) args.push_back(xs[i].cells()[idx[i]].value.value());
    outputs.push_back(apply_scalar(op, args));
    std::size_t i = 0;
    while (i < k && ++idx[i] == xs[i].cells().size()) idx[i++] = 0;
    if (i == k) break;
  }
  const auto out_cuts = cuts(outputs);
  const auto v_ends = with_infinities(out_cuts);

  // Operand grids with the delta points.
  Rational lip = 1;
  if (op.kind == Op::Kind::scale) lip = std::max(Rational(1), trunclab::abs(op.param));
  const Rational delta = min_gap(out_cuts) / (2 * lip * static_cast<long>(k));
  std::vector<std::vector<ExtRational>> ends(k);
  std::vector<Rational> all_points = {Rational(0), Rational(1), op.param};
  for (std::size_t i = 0; i < k; ++i) {
    auto vals = finite_values(xs[i]);
    auto pts = cuts(vals);
    for (const auto& v : vals) {
      pts.push_back(v - delta);
      pts.push_back(v + delta);
    }
    pts = sorted_unique(pts);
    all_points.insert(all_points.end(), pts.begin(), pts.end());
    ends[i] = with_infinities(pts);
  }
  all_points = sorted_unique(all_points);
  Rational mag = 1;
  for (const auto& p : all_points) mag = std::max(mag, Rational(trunclab::abs(p) + 1));
  const Rational eps = std::min(Rational(min_gap(all_points) / 8), Rational(1 / (4 * mag)));

  // Corner limits, memoised by (end index, side) per coordinate.
  std::map<std::vector<std::pair<std::size_t, bool>>, Limit> memo;
  auto corner = [&](const std::vector<std::pair<std::size_t, bool>>& key) -> const Limit& {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Approach> path;
    for (std::size_t i = 0; i < k; ++i) path.push_back({ends[i][key[i].first], key[i].second});
    return memo.emplace(key, path_limit(op, path, eps)).first->second;
  };

  // Boxes, reduced to (inf, inf attained, sup, sup attained) -> joined meets.
  struct Bounds {
    Limit lo, hi;
  };
  std::vector<std::pair<Bounds, Elem>> boxes;
  std::vector<std::size_t> a(k, 0), b(k, 1);
  auto next_interval = [&](std::size_t i) {
    if (++b[i] < ends[i].size()) return true;
    ++a[i];
    b[i] = a[i] + 1;
    if (b[i] < ends[i].size()) return true;
    a[i] = 0;
    b[i] = 1;
    return false;
  };
  while (true) {
    Elem m = f.top();
    for (std::size_t i = 0; i < k; ++i) m = f.meet(m, xs[i].eval({ends[i][a[i]], ends[i][b[i]]}));
    if (m != f.bottom()) {
      Bounds bd{{ExtRational::pos_infinity(), false}, {ExtRational::neg_infinity(), false}};
      for (std::size_t c = 0; c < (std::size_t{1} << k); ++c) {
        std::vector<std::pair<std::size_t, bool>> key;
        for (std::size_t i = 0; i < k; ++i) key.emplace_back((c >> i & 1) ? b[i] : a[i], !(c >> i & 1));
        const auto& l = corner(key);
        if (l.value < bd.lo.value) bd.lo = l;
        else if (l.value == bd.lo.value) bd.lo.attained = bd.lo.attained || l.attained;
        if (bd.hi.value < l.value) bd.hi = l;
        else if (l.value == bd.hi.value) bd.hi.attained = bd.hi.attained || l.attained;
      }
      boxes.emplace_back(bd, m);
    }
    std::size_t i = 0;
    while (i < k && !next_interval(i)) ++i;
    if (i == k) break;
  }

  // Integer ranks for the comparisons.
  std::vector<ExtRational> keys(v_ends.begin(), v_ends.end());
  for (const auto& [bd, m] : boxes) {
    keys.push_back(bd.lo.value);
    keys.push_back(bd.hi.value);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  auto rank = [&](const ExtRational& x) { return std::lower_bound(keys.begin(), keys.end(), x) - keys.begin(); };
  std::map<std::tuple<long, bool, long, bool>, Elem> reduced;
  for (const auto& [bd, m] : boxes) {
    auto key = std::tuple{rank(bd.lo.value), bd.lo.attained, rank(bd.hi.value), bd.hi.attained};
    auto [it, fresh] = reduced.emplace(key, m);
    if (!fresh) it->second = f.join(it->second, m);
  }

  std::vector<GridRow> rows;
  for (const auto& v : intervals(v_ends)) {
    const long ra = rank(v.lo), rb = rank(v.hi);
    Elem acc = f.bottom();
    for (const auto& [key, m] : reduced) {
      const auto& [rl, la, rh, ha] = key;
      const bool inside = (ra < rl || (ra == rl && !la)) && (rh < rb || (rh == rb && !ha));
      if (inside) acc = f.join(acc, m);
    }
    rows.push_back({v, acc});
  }
  return rows;
}

frame::Elem truncate_below_case(const FrameReal& g, const Rational& r) {
  return r > 1 ? g.frame().top() : g.lower(r);
}

frame::Elem truncate_above_case(const FrameReal& g, const Rational& r) {
  return r >= 1 ? g.frame().bottom() : g.upper(r);
}

frame::Elem tminus_one_below_case(const FrameReal& g, const Rational& r) {
  return r <= 0 ? g.frame().bottom() : g.lower(r + 1);
}

frame::Elem tminus_one_above_case(const FrameReal& g, const Rational& r) {
  return r < 0 ? g.frame().top() : g.upper(r + 1);
}

std::vector<std::size_t> brute_diff(const boolean::GeneralizedBooleanAlgebra& a, std::size_t x, std::size_t y) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a.meet(c, y) == a.bottom() && a.join(c, y) == a.join(x, y)) out.push_back(c);
  }
  return out;
}

std::vector<trunc::NormalTerm> brute_normal_form(const trunc::SimpleElement& g) {
  std::map<Rational, Subset> classes;
  for (std::size_t i = 0; i < g.values().size(); ++i) {
    if (g[i] != 0) classes[g[i]] = classes[g[i]].with(i);
  }
  std::vector<trunc::NormalTerm> out;
  for (const auto& [r, s] : classes) out.push_back({r, s});
  return out;
}

trunc::SimpleElement brute_good_term(const trunc::SimpleElement& g, std::int64_t n) {
  std::vector<Rational> v;
  for (const auto& x : g.values()) v.push_back(std::clamp(Rational(x - (n - 1)), Rational(0), Rational(1)));
  return {g.space(), v};
}

std::vector<Rational> tail_values(const seq::TailElement& g, std::int64_t upto) {
  std::vector<Rational> v;
  for (std::int64_t n = 1; n <= upto; ++n) v.push_back(g.value(n));
  return v;
}

bool brute_drop_condition(const frame::FrameSurjection& q, const FrameReal& h_prime) {
  const auto& s = q.source()->frame();
  Elem finite = s.bottom();
  for (const auto& c : h_prime.cells()) {
    if (c.value.is_finite()) finite = s.join(finite, c.element);
  }
  return q(finite) == q.target()->frame().top();
}

std::optional<FrameReal> brute_e0q(const frame::FrameSurjection& q, const FrameReal& h) {
  const auto& s = q.source()->frame();
  const auto& t = q.target()->frame();
  const auto atoms = central_atoms(s);
  std::vector<ExtRational> choices = {ExtRational::neg_infinity(), ExtRational::pos_infinity()};
  for (const auto& c : h.cells()) choices.push_back(c.value);
  std::vector<std::size_t> pick(atoms.size(), 0);
  while (true) {
    // Group atoms by value, then compare images with h directly.
    std::map<ExtRational, Elem> by_value;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      auto [it, fresh] = by_value.emplace(choices[pick[i]], atoms[i]);
      if (!fresh) it->second = s.join(it->second, atoms[i]);
    }
    bool ok = true;
    Elem finite = t.bottom();
    std::map<ExtRational, Elem> image;
    for (const auto& [v, x] : by_value) {
      if (!v.is_finite()) {
        ok = ok && q(x) == t.bottom();
        continue;
      }
      finite = t.join(finite, q(x));
      if (q(x) != t.bottom()) image[v] = q(x);
    }
    ok = ok && finite == t.top();
    if (ok) {
      std::map<ExtRational, Elem> want;
      for (const auto& c : h.cells()) want[c.value] = c.element;
      if (image == want) {
        std::vector<frame::Cell> cells;
        for (const auto& [v, x] : by_value) cells.push_back({v, x});
        return FrameReal(q.source(), cells, FrameReal::Kind::extended);
      }
    }
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices.size()) pick[i++] = 0;
    if (i == pick.size()) return std::nullopt;
  }
}

std::vector<Interval> full_grid(std::vector<Rational> values) { return intervals(with_infinities(cuts(values))); }

}  // namespace trunclab::props
