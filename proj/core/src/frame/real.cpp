#include "trunclab/frame/real.hpp"

#include <algorithm>
#include <map>

#include "trunclab/error.hpp"
#include "trunclab/trunc/analysis.hpp"

namespace trunclab::frame {

std::string to_string(const Interval& u) { return "(" + to_string(u.lo) + ", " + to_string(u.hi) + ")"; }

FrameReal::FrameReal(PointedPtr frame, std::vector<Cell> cells, Kind kind) : frame_(std::move(frame)), kind_(kind) {
  const auto& f = frame_->frame();
  std::map<ExtRational, Elem> merged;
  Elem total = f.bottom();
  for (const auto& c : cells) {
    if (c.element >= f.size()) throw StructuralError("cell element out of range");
    if (c.element == f.bottom()) continue;
    if (f.meet(total, c.element) != f.bottom()) {
      throw InvariantError("cell " + f.label(c.element) + " overlaps an earlier cell");
    }
    total = f.join(total, c.element);
    auto [it, fresh] = merged.emplace(c.value, c.element);
    if (!fresh) it->second = f.join(it->second, c.element);
  }
  if (total != f.top()) throw InvariantError("cells join to " + f.label(total) + ", not top");
  for (const auto& [v, x] : merged) cells_.push_back({v, x});
  if (kind_ == Kind::real) {
    if (!is_finite()) throw InvariantError("real-kind frame real with an infinite value");
    if (!is_pointed()) throw InvariantError("the cell containing the point must have value 0");
  }
}

FrameReal FrameReal::zero(PointedPtr frame) {
  const Elem top = frame->frame().top();
  return {std::move(frame), {{Rational(0), top}}};
}

bool FrameReal::is_finite() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.value.is_finite(); });
}

std::optional<ExtRational> FrameReal::value_at_point() const {
  for (const auto& c : cells_) {
    if (frame_->point(c.element)) return c.value;
  }
  return std::nullopt;
}

bool FrameReal::is_pointed() const {
  auto v = value_at_point();
  return v && *v == ExtRational(Rational(0));
}

bool FrameReal::is_nonnegative() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return !(c.value < ExtRational(Rational(0))); });
}

Elem FrameReal::eval(const Interval& u) const {
  const auto& f = frame();
  Elem r = f.bottom();
  for (const auto& c : cells_) {
    if (u.contains(c.value)) r = f.join(r, c.element);
  }
  return r;
}

Elem FrameReal::cozero() const { return frame().join(upper(0), lower(0)); }

std::vector<ExtRational> FrameReal::values() const {
  std::vector<ExtRational> v;
  for (const auto& c : cells_) v.push_back(c.value);
  return v;
}

std::string FrameReal::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    out += (i ? ", " : "") + std::string("(") + trunclab::to_string(cells_[i].value) + "," +
           frame().label(cells_[i].element) + ")";
  }
  return out + "]";
}

bool operator==(const FrameReal& a, const FrameReal& b) {
  return *a.frame_ == *b.frame_ && a.cells_ == b.cells_;
}

FrameReal induced_op(const Op& op, std::span<const FrameReal> xs) {
  validate(op);
  if (xs.size() != op.arity()) {
    throw PreconditionError(to_string(op) + " expects " + std::to_string(op.arity()) + " operand(s), got " +
                            std::to_string(xs.size()));
  }
  for (const auto& x : xs) {
    if (!(*x.pointed() == *xs[0].pointed())) throw PreconditionError("operands live on different frames");
    if (!x.is_finite()) throw PreconditionError("induced operations take real-kind operands");
    if (op.needs_nonnegative() && !x.is_nonnegative()) {
      throw PreconditionError(to_string(op) + " requires a nonnegative operand");
    }
  }
  const auto& f = xs[0].frame();
  std::vector<Cell> out;
  if (xs.size() == 1) {
    for (const auto& c : xs[0].cells()) {
      const Rational v[] = {c.value.value()};
      out.push_back({apply_scalar(op, v), c.element});
    }
  } else {
    for (const auto& a : xs[0].cells()) {
      for (const auto& b : xs[1].cells()) {
        const Elem m = f.meet(a.element, b.element);
        if (m == f.bottom()) continue;
        const Rational v[] = {a.value.value(), b.value.value()};
        out.push_back({apply_scalar(op, v), m});
      }
    }
  }
  return {xs[0].pointed(), std::move(out)};
}

FrameReal induced_op(const Op& op, const FrameReal& a) { return induced_op(op, std::span(&a, 1)); }

FrameReal induced_op(const Op& op, const FrameReal& a, const FrameReal& b) {
  const FrameReal xs[] = {a, b};
  return induced_op(op, xs);
}

FrameReal chi(const PointedPtr& frame, Elem x) {
  const auto& f = frame->frame();
  if (x >= f.size()) throw StructuralError("element out of range");
  if (!f.complemented(x)) throw PreconditionError(f.label(x) + " is not complemented");
  if (frame->point(x)) throw PreconditionError("point in cell " + f.label(x));
  return {frame, {{Rational(1), x}, {Rational(0), f.pseudocomplement(x)}}};
}

UnitalCheck frame_uc_check(const FrameReal& u) {
  UnitalCheck r;
  if (!u.is_finite() || !u.is_nonnegative()) return r;
  if (!(induced_op(Op::truncate(), induced_op(Op::scale(2), u)) == u)) return r;
  const Elem coz = u.upper(0);
  if (!(chi(u.pointed(), coz) == u)) throw InvariantError("unital element differs from chi of its cozero");
  r.unital = true;
  r.witness = coz;
  return r;
}

namespace {

std::vector<Rational> finite_values(const std::vector<FrameReal>& fam) {
  std::vector<Rational> v;
  for (const auto& g : fam) {
    for (const auto& c : g.cells()) {
      if (c.value.is_finite()) v.push_back(c.value.value());
    }
  }
  return v;
}

}  // namespace

FrameSup frame_pointwise_sup(const std::vector<FrameReal>& family) {
  if (family.empty()) throw PreconditionError("pointwise sup of an empty family");
  FrameReal sup = family[0];
  for (std::size_t i = 1; i < family.size(); ++i) sup = induced_op(Op::join(), sup, family[i]);
  FrameSup r{sup, true, std::nullopt};
  const auto& f = sup.frame();
  for (const auto& cut : trunc::cut_grid(finite_values(family))) {
    Elem u = f.bottom();
    for (const auto& a : family) u = f.join(u, a.upper(cut));
    if (u != sup.upper(cut)) {
      r.verified = false;
      r.bad_cut = cut;
      break;
    }
  }
  return r;
}

std::optional<std::size_t> FrameDini::index_for(const Rational& eps) const {
  if (eps <= 0 || terms.empty()) return std::nullopt;
  const auto& f = terms[0].frame();
  // The last term repeats forever, so it must already be below eps.
  if (terms.back().lower(eps) != f.top()) return std::nullopt;
  std::size_t m = terms.size();
  while (m > 1 && terms[m - 2].lower(eps) == f.top()) --m;
  return m;
}

FrameDini frame_dini(const std::vector<FrameReal>& seq) {
  if (seq.empty()) throw PreconditionError("dini needs at least one term");
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (!seq[k].is_finite() || !seq[k].is_nonnegative()) {
      throw PreconditionError("term " + std::to_string(k + 1) + " is not a nonnegative real");
    }
    if (k > 0) {
      auto d = induced_op(Op::add(), seq[k - 1], induced_op(Op::negate(), seq[k]));
      if (!d.is_nonnegative()) throw PreconditionError("sequence increases at term " + std::to_string(k + 1));
    }
  }
  FrameDini r;
  r.terms = seq;
  const auto& f = seq[0].frame();
  // Cuts: every positive grid point, plus one below the least positive value.
  auto grid = trunc::cut_grid(finite_values(seq));
  std::vector<Rational> eps;
  for (const auto& g : grid) {
    if (g > 0) eps.push_back(g);
  }
  Rational least = 1;
  for (const auto& g : eps) least = std::min(least, g);
  eps.push_back(least / 2);
  r.pointwise_to_zero = true;
  r.uniform = true;
  for (const auto& e : eps) {
    Elem joined = f.bottom();
    for (const auto& g : seq) joined = f.join(joined, g.lower(e));
    if (joined != f.top()) r.pointwise_to_zero = false;
    if (!r.index_for(e)) r.uniform = false;
  }
  return r;
}

}  // namespace trunclab::frame
