#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trunclab/boolean/algebra.hpp"
#include "trunclab/frame/surjection.hpp"
#include "trunclab/kernel/kernel.hpp"
#include "trunclab/seqspace/seq_trunc.hpp"
#include "trunclab/trunc/simple_trunc.hpp"

namespace trunclab::io {

/// An ordered list of named terms of one model. `stable` marks that the last
/// term repeats forever.
struct Sequence {
  enum class Kind { simple, frame, tail };
  Kind kind = Kind::simple;
  bool stable = false;
  std::vector<std::string> term_names;
  std::vector<trunc::SimpleElement> simple;
  std::vector<frame::FrameReal> reals;
  std::vector<seq::TailElement> tails;
};

struct Family {
  std::string space;
  std::vector<Subset> sets;
};

struct Gba {
  boolean::GeneralizedBooleanAlgebra algebra;
  /// Point labels when given as a set family, in which case the tables are
  /// derived and not serialized.
  std::optional<std::vector<std::string>> universe;
};

struct Kernel {
  std::string model;  // name of a trunc or seqtrunc
  kernel::KernelSpec spec;
};

using Object = std::variant<boolean::SpacePtr, trunc::SimpleElement, Family, trunc::SimpleTrunc, Sequence, Gba,
                            frame::FramePtr, frame::PointedPtr, frame::FrameReal, frame::FrameSurjection,
                            seq::SeqTrunc, seq::TailElement, Kernel>;

/// Statement keyword of each alternative, in variant order.
std::string_view kind_name(const Object& o);

/// One file, one symbol table. Declarations keep their order.
class Instance {
public:
  bool has(const std::string& name) const { return objects_.contains(name); }
  const Object& get(const std::string& name) const;
  template <class T>
  const T* find(const std::string& name) const {
    auto it = objects_.find(name);
    return it == objects_.end() ? nullptr : std::get_if<T>(&it->second);
  }
  const std::vector<std::string>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }

  /// Throws StructuralError for a duplicate name.
  void add(const std::string& name, Object o);

  friend bool operator==(const Instance& a, const Instance& b);

private:
  std::map<std::string, Object> objects_;
  std::vector<std::string> order_;
};

struct LocatedError {
  std::size_t line = 0;
  std::string object;
  std::string message;
  std::string to_string() const;
};

struct ParseResult {
  std::optional<Instance> instance;
  std::vector<LocatedError> errors;
  bool ok() const { return errors.empty(); }
};

ParseResult parse_instance_text(std::string_view text);
/// An unreadable file is reported as an error on line 0.
ParseResult parse_instance(const std::string& path);

/// Text that parses back to an equal instance.
std::string serialize(const Instance& inst);

/// "{correction: [1:1/2], tail: [1]}"; throws StructuralError.
seq::TailElement parse_tail(std::string_view text);
/// "(a,b)" with ends rational, "-inf" or "inf"; throws StructuralError.
frame::Interval parse_interval(std::string_view text);

}  // namespace trunclab::io
