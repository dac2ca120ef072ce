#include "trunclab/seqspace/tail_element.hpp"

#include <algorithm>

#include "trunclab/error.hpp"

namespace trunclab::seq {

namespace {

Rational inv_pow(std::int64_t n, std::size_t k) {
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), mpz_class(static_cast<long>(n)).get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(mpz_class(1), p);
}

Rational max_q(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational min_q(const Rational& a, const Rational& b) { return a < b ? a : b; }

std::int64_t floor_plus_one(const Rational& q) { return floor_to_int(q) + 1; }

// Replaces values below `limit` by `values(n)`, keeping the tail of `base`.
template <class F>
TailElement rewrite_prefix(const TailElement& base, std::int64_t limit, F values) {
  std::map<std::int64_t, Rational> corr;
  for (const auto& [n, v] : base.correction()) {
    if (n >= limit) corr.emplace(n, v);
  }
  for (std::int64_t n = 1; n < limit; ++n) corr[n] = values(n) - base.tail_value(n);
  return {std::move(corr), base.tail()};
}

}  // namespace

TailElement::TailElement(std::map<std::int64_t, Rational> correction, std::vector<Rational> tail)
    : correction_(std::move(correction)), tail_(std::move(tail)) {
  for (const auto& [n, v] : correction_) {
    if (n < 1) throw InvariantError("correction at n = " + std::to_string(n) + "; points start at 1");
  }
  canonicalize();
}

void TailElement::canonicalize() {
  std::erase_if(correction_, [](const auto& kv) { return kv.second == 0; });
  while (!tail_.empty() && tail_.back() == 0) tail_.pop_back();
}

TailElement TailElement::monomial(std::size_t order, const Rational& coeff) {
  if (order < 1) throw PreconditionError("tail monomials have order >= 1");
  std::vector<Rational> t(order, Rational(0));
  t.back() = coeff;
  return {{}, std::move(t)};
}

TailElement TailElement::indicator(const std::set<std::int64_t>& points, const Rational& coeff) {
  std::map<std::int64_t, Rational> c;
  for (auto n : points) c[n] = coeff;
  return {std::move(c), {}};
}

TailElement TailElement::finite(const std::map<std::int64_t, Rational>& values) { return {values, {}}; }

Rational TailElement::tail_value(std::int64_t n) const {
  Rational s = 0;
  for (std::size_t k = 0; k < tail_.size(); ++k) {
    if (tail_[k] != 0) s += tail_[k] * inv_pow(n, k + 1);
  }
  return s;
}

Rational TailElement::value(std::int64_t n) const {
  if (n < 1) throw PreconditionError("points of omega+1 start at 1");
  auto it = correction_.find(n);
  Rational base = it == correction_.end() ? Rational(0) : it->second;
  return base + tail_value(n);
}

std::optional<std::size_t> TailElement::leading_order() const {
  for (std::size_t k = 0; k < tail_.size(); ++k) {
    if (tail_[k] != 0) return k + 1;
  }
  return std::nullopt;
}

int TailElement::leading_sign() const {
  auto j = leading_order();
  return j ? sgn(tail_[*j - 1]) : 0;
}

std::int64_t TailElement::max_correction() const { return correction_.empty() ? 0 : correction_.rbegin()->first; }

Rational TailElement::tail_weight() const {
  Rational s = 0;
  for (const auto& c : tail_) s += trunclab::abs(c);
  return s;
}

std::int64_t TailElement::crossover() const {
  auto j = leading_order();
  if (!j) return max_correction() + 1;
  Rational rest = 0;
  for (std::size_t k = *j; k < tail_.size(); ++k) rest += trunclab::abs(tail_[k]);
  const Rational ratio = rest / trunclab::abs(tail_[*j - 1]);
  return max_correction() + std::max<std::int64_t>(1, ceil_to_int(ratio)) + 1;
}

bool TailElement::is_nonnegative() const {
  if (leading_sign() < 0) return false;
  const auto limit = crossover();
  for (std::int64_t n = 1; n < limit; ++n) {
    if (value(n) < 0) return false;
  }
  return true;
}

std::set<std::int64_t> TailElement::finite_support() const {
  std::set<std::int64_t> s;
  const auto limit = crossover();
  for (std::int64_t n = 1; n < limit; ++n) {
    if (value(n) != 0) s.insert(n);
  }
  return s;
}

std::string TailElement::to_string() const {
  std::string out = "{correction: [";
  bool first = true;
  for (const auto& [n, v] : correction_) {
    out += (first ? "" : ", ") + std::to_string(n) + ":" + trunclab::to_string(v);
    first = false;
  }
  out += "], tail: [";
  for (std::size_t k = 0; k < tail_.size(); ++k) out += (k ? ", " : "") + trunclab::to_string(tail_[k]);
  return out + "]}";
}

TailElement operator+(const TailElement& a, const TailElement& b) {
  auto corr = a.correction();
  for (const auto& [n, v] : b.correction()) corr[n] += v;
  std::vector<Rational> t(std::max(a.degree(), b.degree()), Rational(0));
  for (std::size_t k = 0; k < a.degree(); ++k) t[k] += a.tail()[k];
  for (std::size_t k = 0; k < b.degree(); ++k) t[k] += b.tail()[k];
  return {std::move(corr), std::move(t)};
}

TailElement operator*(const Rational& q, const TailElement& a) {
  auto corr = a.correction();
  for (auto& [n, v] : corr) v *= q;
  auto t = a.tail();
  for (auto& c : t) c *= q;
  return {std::move(corr), std::move(t)};
}

TailElement operator-(const TailElement& a) { return Rational(-1) * a; }
TailElement operator-(const TailElement& a, const TailElement& b) { return a + (-b); }

namespace {

// Pointwise min (want_min) or max of a and b.
TailElement lattice(const TailElement& a, const TailElement& b, bool want_min) {
  const TailElement d = a - b;
  // Past the crossover of a - b the sign of a - b is its leading sign; also
  // stay past both correction supports so the chosen operand is exact there.
  const std::int64_t limit = std::max({d.crossover(), a.max_correction() + 1, b.max_correction() + 1});
  const int s = d.leading_sign();
  const TailElement& chosen = (s > 0) == want_min ? b : a;
  return rewrite_prefix(chosen, limit, [&](std::int64_t n) {
    return want_min ? min_q(a.value(n), b.value(n)) : max_q(a.value(n), b.value(n));
  });
}

void require_nonnegative(const Op& op, const TailElement& a) {
  if (!a.is_nonnegative()) throw PreconditionError(to_string(op) + " requires a nonnegative operand");
}

// Least N past the corrections with value(n) < r for all n >= N (r > 0).
std::int64_t below_level(const TailElement& a, const Rational& r) {
  return std::max(a.max_correction() + 1, floor_plus_one(a.tail_weight() / r));
}

}  // namespace

TailElement meet(const TailElement& a, const TailElement& b) { return lattice(a, b, true); }
TailElement join(const TailElement& a, const TailElement& b) { return lattice(a, b, false); }

TailElement truncN(const TailElement& a, const Rational& r) {
  const Op op = Op::truncN(r);
  validate(op);
  require_nonnegative(op, a);
  return rewrite_prefix(a, below_level(a, r), [&](std::int64_t n) { return min_q(a.value(n), r); });
}

TailElement truncate(const TailElement& a) {
  require_nonnegative(Op::truncate(), a);
  return truncN(a, 1);
}

TailElement tminus(const TailElement& a, const Rational& r) {
  const Op op = Op::tminus(r);
  validate(op);
  require_nonnegative(op, a);
  if (r == 0) return a;
  std::map<std::int64_t, Rational> vals;
  const auto limit = below_level(a, r);
  for (std::int64_t n = 1; n < limit; ++n) vals[n] = max_q(a.value(n) - r, Rational(0));
  return TailElement::finite(vals);
}

TailElement abs(const TailElement& a) { return join(a, -a); }

bool leq(const TailElement& a, const TailElement& b) { return (b - a).is_nonnegative(); }

TailElement tail_apply_op(const Op& op, std::span<const TailElement> xs) {
  validate(op);
  if (xs.size() != op.arity()) {
    throw PreconditionError(to_string(op) + " expects " + std::to_string(op.arity()) + " operand(s), got " +
                            std::to_string(xs.size()));
  }
  switch (op.kind) {
    case Op::Kind::add: return xs[0] + xs[1];
    case Op::Kind::negate: return -xs[0];
    case Op::Kind::scale: return op.param * xs[0];
    case Op::Kind::meet: return meet(xs[0], xs[1]);
    case Op::Kind::join: return join(xs[0], xs[1]);
    case Op::Kind::truncate: return truncate(xs[0]);
    case Op::Kind::tminus: return tminus(xs[0], op.param);
    case Op::Kind::truncN: return truncN(xs[0], op.param);
  }
  throw PreconditionError("unsupported operation");
}

TailElement tail_apply_op(const Op& op, const TailElement& a) { return tail_apply_op(op, std::span(&a, 1)); }

TailElement tail_apply_op(const Op& op, const TailElement& a, const TailElement& b) {
  const TailElement xs[] = {a, b};
  return tail_apply_op(op, xs);
}

TailElement restrict_to_cozero(const TailElement& f, const TailElement& g) {
  if (g.tail_zero()) {
    std::map<std::int64_t, Rational> vals;
    for (auto n : g.finite_support()) vals[n] = f.value(n);
    return TailElement::finite(vals);
  }
  // g is nonzero from its crossover on; zero it out at the finitely many zeros below.
  const auto limit = std::max(g.crossover(), f.max_correction() + 1);
  return rewrite_prefix(f, limit, [&](std::int64_t n) { return g.value(n) != 0 ? f.value(n) : Rational(0); });
}

TailElement restrict_to_prefix(const TailElement& f, std::int64_t n) {
  std::map<std::int64_t, Rational> vals;
  for (std::int64_t k = 1; k <= n; ++k) vals[k] = f.value(k);
  return TailElement::finite(vals);
}

void SeqOpen::canonicalize() {
  std::erase_if(points, [&](std::int64_t n) { return n >= bound; });
  while (bound > 1 && points.contains(bound - 1) == cofinite) {
    --bound;
    points.erase(bound);
  }
}

SeqOpen above(const TailElement& g, const Rational& r) {
  SeqOpen s;
  s.omega = r < 0;
  std::int64_t limit;
  if (r == 0) {
    limit = g.crossover();
    s.cofinite = g.leading_sign() > 0;
  } else {
    // |tail(n)| <= weight/n < |r| once n > weight/|r|; the sign of g - r is then -sign(r).
    limit = std::max(g.max_correction() + 1, floor_plus_one(g.tail_weight() / trunclab::abs(r)));
    s.cofinite = r < 0;
  }
  for (std::int64_t n = 1; n < limit; ++n) {
    if (g.value(n) > r) s.points.insert(n);
  }
  s.bound = limit;
  s.canonicalize();
  return s;
}

SeqOpen unite(const SeqOpen& a, const SeqOpen& b) {
  SeqOpen s;
  s.bound = std::max(a.bound, b.bound);
  for (std::int64_t n = 1; n < s.bound; ++n) {
    if (a.contains(n) || b.contains(n)) s.points.insert(n);
  }
  s.cofinite = a.cofinite || b.cofinite;
  s.omega = a.omega || b.omega;
  s.canonicalize();
  return s;
}

}  // namespace trunclab::seq
