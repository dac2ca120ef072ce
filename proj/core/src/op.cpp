#include "trunclab/op.hpp"

#include <algorithm>

#include "trunclab/error.hpp"

namespace trunclab {

std::size_t Op::arity() const {
  switch (kind) {
    case Kind::add:
    case Kind::meet:
    case Kind::join:
      return 2;
    default:
      return 1;
  }
}

bool Op::needs_nonnegative() const {
  return kind == Kind::truncate || kind == Kind::tminus || kind == Kind::truncN;
}

void validate(const Op& op) {
  if (op.kind == Op::Kind::tminus && op.param < 0) {
    throw PreconditionError("tminus threshold must be >= 0, got " + to_string(op.param));
  }
  if (op.kind == Op::Kind::truncN && op.param <= 0) {
    throw PreconditionError("truncN bound must be > 0, got " + to_string(op.param));
  }
}

Rational apply_scalar(const Op& op, std::span<const Rational> args) {
  if (args.size() != op.arity()) {
    throw PreconditionError(to_string(op) + " expects " + std::to_string(op.arity()) +
                            " operand(s), got " + std::to_string(args.size()));
  }
  const Rational& x = args[0];
  switch (op.kind) {
    case Op::Kind::add:
      return x + args[1];
    case Op::Kind::negate:
      return -x;
    case Op::Kind::scale:
      return op.param * x;
    case Op::Kind::meet:
      return std::min(x, args[1]);
    case Op::Kind::join:
      return std::max(x, args[1]);
    case Op::Kind::truncate:
      return std::min(x, Rational(1));
    case Op::Kind::tminus: {
      Rational d = x - op.param;
      return d > 0 ? d : Rational(0);
    }
    case Op::Kind::truncN:
      return std::min(x, op.param);
  }
  return 0;
}

Op parse_op(std::string_view text) {
  auto colon = text.find(':');
  auto name = text.substr(0, colon);
  auto param = [&]() -> Rational {
    if (colon == std::string_view::npos) {
      throw StructuralError("operation '" + std::string(name) + "' needs a parameter (name:value)");
    }
    return parse_rational(text.substr(colon + 1));
  };
  auto no_param = [&](Op op) {
    if (colon != std::string_view::npos) {
      throw StructuralError("operation '" + std::string(name) + "' takes no parameter");
    }
    return op;
  };
  Op op;
  if (name == "add") op = no_param(Op::add());
  else if (name == "negate") op = no_param(Op::negate());
  else if (name == "scale") op = Op::scale(param());
  else if (name == "meet") op = no_param(Op::meet());
  else if (name == "join") op = no_param(Op::join());
  else if (name == "truncate") op = no_param(Op::truncate());
  else if (name == "tminus") op = Op::tminus(param());
  else if (name == "truncN") op = Op::truncN(param());
  else throw StructuralError("unknown operation '" + std::string(text) + "'");
  validate(op);
  return op;
}

std::string to_string(const Op& op) {
  switch (op.kind) {
    case Op::Kind::add: return "add";
    case Op::Kind::negate: return "negate";
    case Op::Kind::scale: return "scale:" + to_string(op.param);
    case Op::Kind::meet: return "meet";
    case Op::Kind::join: return "join";
    case Op::Kind::truncate: return "truncate";
    case Op::Kind::tminus: return "tminus:" + to_string(op.param);
    case Op::Kind::truncN: return "truncN:" + to_string(op.param);
  }
  return "?";
}

}  // namespace trunclab
