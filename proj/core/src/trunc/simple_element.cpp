#include "trunclab/trunc/simple_element.hpp"

#include <algorithm>
#include <set>

#include "trunclab/error.hpp"

namespace trunclab::trunc {

SimpleElement::SimpleElement(SpacePtr space) : space_(std::move(space)) {
  if (!space_) throw PreconditionError("null space");
  values_.assign(space_->size(), Rational(0));
}

SimpleElement::SimpleElement(SpacePtr space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw PreconditionError("null space");
  if (values_.size() != space_->size()) {
    throw InvariantError("element has " + std::to_string(values_.size()) + " values for a space of " +
                         std::to_string(space_->size()) + " points");
  }
  if (values_[space_->star()] != 0) {
    throw InvariantError("element must vanish at the star '" + space_->star_label() + "'");
  }
}

SimpleElement SimpleElement::from_tuple(SpacePtr space, const std::vector<Rational>& non_star_values) {
  if (non_star_values.size() + 1 != space->size()) {
    throw InvariantError("tuple has " + std::to_string(non_star_values.size()) + " entries; the space has " +
                         std::to_string(space->size() - 1) + " non-star points");
  }
  std::vector<Rational> v(space->size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < space->size(); ++i) v[i] = i == space->star() ? Rational(0) : non_star_values[k++];
  return {std::move(space), std::move(v)};
}

SimpleElement SimpleElement::from_map(SpacePtr space, const std::map<std::string, Rational>& values) {
  std::vector<Rational> v(space->size());
  for (const auto& [label, q] : values) {
    auto i = space->index_of(label);
    if (!i) throw InvariantError("unknown point '" + label + "'");
    v[*i] = q;
  }
  return {std::move(space), std::move(v)};
}

SimpleElement SimpleElement::indicator(SpacePtr space, Subset s, const Rational& coeff) {
  if (s.contains(space->star())) throw InvariantError("indicator set contains the star");
  std::vector<Rational> v(space->size());
  for (auto i : s.indices()) v.at(i) = coeff;
  return {std::move(space), std::move(v)};
}

const Rational& SimpleElement::at(const std::string& label) const {
  auto i = space_->index_of(label);
  if (!i) throw PreconditionError("unknown point '" + label + "'");
  return values_[*i];
}

bool SimpleElement::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return q == 0; });
}

bool SimpleElement::is_nonnegative() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return q >= 0; });
}

Subset SimpleElement::support() const {
  Subset s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != 0) s = s.with(i);
  }
  return s;
}

Subset SimpleElement::level_set(const Rational& r) const {
  Subset s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == r) s = s.with(i);
  }
  return s;
}

std::vector<Rational> SimpleElement::nonzero_values() const {
  std::set<Rational> vals;
  for (const auto& q : values_) {
    if (q != 0) vals.insert(q);
  }
  return {vals.begin(), vals.end()};
}

Rational SimpleElement::max_value() const { return *std::max_element(values_.begin(), values_.end()); }
Rational SimpleElement::min_value() const { return *std::min_element(values_.begin(), values_.end()); }

bool SimpleElement::leq(const SimpleElement& o) const {
  require_same_space(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > o.values_[i]) return false;
  }
  return true;
}

std::string SimpleElement::tuple_string() const {
  std::string out = "(";
  bool first = true;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i == space_->star()) continue;
    if (!first) out += ",";
    out += to_string(values_[i]);
    first = false;
  }
  return out + ")";
}

std::string SimpleElement::support_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == 0) continue;
    if (!first) out += ", ";
    out += space_->label(i) + ":" + to_string(values_[i]);
    first = false;
  }
  return out + "}";
}

bool operator==(const SimpleElement& a, const SimpleElement& b) {
  return (a.space_ == b.space_ || *a.space_ == *b.space_) && a.values_ == b.values_;
}

void require_same_space(const SimpleElement& a, const SimpleElement& b) {
  if (a.space() != b.space() && !(*a.space() == *b.space())) {
    throw PreconditionError("operands live on different spaces");
  }
}

SimpleElement apply_op(const Op& op, std::span<const SimpleElement> operands) {
  validate(op);
  if (operands.size() != op.arity()) {
    throw PreconditionError(to_string(op) + " expects " + std::to_string(op.arity()) + " operand(s), got " +
                            std::to_string(operands.size()));
  }
  for (const auto& e : operands) require_same_space(operands[0], e);
  if (op.needs_nonnegative() && !operands[0].is_nonnegative()) {
    throw PreconditionError(to_string(op) + " requires a nonnegative operand");
  }
  const auto& space = operands[0].space();
  std::vector<Rational> out(space->size());
  std::vector<Rational> args(operands.size());
  for (std::size_t i = 0; i < space->size(); ++i) {
    for (std::size_t k = 0; k < operands.size(); ++k) args[k] = operands[k][i];
    out[i] = apply_scalar(op, args);
  }
  return {space, std::move(out)};
}

SimpleElement apply_op(const Op& op, const SimpleElement& a) { return apply_op(op, std::span(&a, 1)); }

SimpleElement apply_op(const Op& op, const SimpleElement& a, const SimpleElement& b) {
  const SimpleElement ops[] = {a, b};
  return apply_op(op, ops);
}

SimpleElement abs(const SimpleElement& a) { return join(a, -a); }
SimpleElement positive_part(const SimpleElement& a) { return join(a, SimpleElement(a.space())); }

}  // namespace trunclab::trunc
