#pragma once

#include <stdexcept>
#include <string>

namespace trunclab {

/// Malformed input: non-total tables, unparsable numbers, dangling labels.
class StructuralError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a documented invariant of its type.
class InvariantError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (wrong sign, mismatched space,
/// non-dense surjection, ...).
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace trunclab
