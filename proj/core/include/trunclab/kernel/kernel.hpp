#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "trunclab/seqspace/seq_trunc.hpp"
#include "trunclab/trunc/simple_trunc.hpp"

namespace trunclab::kernel {

/// {g in the trunc : supp g is inside `support`}. The support is normalized to
/// the union of the family atoms it contains.
class SimpleKernel {
public:
  SimpleKernel(trunc::SimpleTrunc model, Subset support);

  const trunc::SimpleTrunc& model() const { return model_; }
  Subset support() const { return support_; }
  bool contains(const trunc::SimpleElement& g) const;
  std::string describe() const;

  friend bool operator==(const SimpleKernel& a, const SimpleKernel& b) { return a.support_ == b.support_; }

private:
  trunc::SimpleTrunc model_;
  Subset support_;
};

/// Convex subtruncs of a SeqTrunc given by a support over the naturals and a
/// set of allowed tail slots. Allowed slots must be upward closed, so they are
/// described by the least allowed order; degree + 1 means no tail at all. A
/// finite support forces a zero tail.
class SeqKernel {
public:
  /// support = nullopt means all of the naturals.
  SeqKernel(seq::SeqTrunc model, std::optional<std::set<std::int64_t>> support, std::size_t min_order);

  /// Flags per tail slot 1..degree; throws InvariantError if not upward closed.
  static SeqKernel from_flags(seq::SeqTrunc model, std::optional<std::set<std::int64_t>> support,
                              const std::vector<bool>& tail_allowed);
  static SeqKernel whole(seq::SeqTrunc model) { return {model, std::nullopt, 1}; }
  /// All finitely supported elements.
  static SeqKernel finite_support(seq::SeqTrunc model) { return {model, std::nullopt, model.degree() + 1}; }

  const seq::SeqTrunc& model() const { return model_; }
  const std::optional<std::set<std::int64_t>>& support() const { return support_; }
  std::size_t min_order() const { return min_order_; }
  bool allows_tail() const { return min_order_ <= model_.degree(); }
  bool contains(const seq::TailElement& g) const;
  std::string describe() const;

  friend bool operator==(const SeqKernel& a, const SeqKernel& b) {
    return a.support_ == b.support_ && a.min_order_ == b.min_order_;
  }

private:
  seq::SeqTrunc model_;
  std::optional<std::set<std::int64_t>> support_;
  std::size_t min_order_;
};

using KernelSpec = std::variant<SimpleKernel, SeqKernel>;

std::string describe(const KernelSpec& k);

struct ConditionVerdict {
  bool pass = true;
  std::size_t samples = 0;
  /// Decided for all elements by a structural argument, or refuted by a checked witness.
  bool exact = false;
  std::string witness;
  /// The failing element for tail models.
  std::optional<seq::TailElement> tail_witness;
};

struct KernelConditions {
  ConditionVerdict archimedean;  // (1): exists h >= 0 with (n g - h)+ in K for all n  =>  g in K
  ConditionVerdict truncation;   // (2): truncate(g) in K  =>  g in K
  ConditionVerdict tminus;       // (3): g tminus 1/n in K for all n  =>  g in K
  bool all_pass() const { return archimedean.pass && truncation.pass && tminus.pass; }
};

/// Each condition is tested on nonnegative g: structured generators first,
/// then `budget` seeded samples. The premises are decided exactly per sample.
KernelConditions kernel_conditions(const KernelSpec& k, std::size_t budget, std::uint64_t seed);

/// Exact premise tests, exposed for tests. g, h >= 0.
bool archimedean_premise(const SimpleKernel& k, const trunc::SimpleElement& g, const trunc::SimpleElement& h);
bool archimedean_premise(const SeqKernel& k, const seq::TailElement& g, const seq::TailElement& h);
bool tminus_premise(const SimpleKernel& k, const trunc::SimpleElement& g);
bool tminus_premise(const SeqKernel& k, const seq::TailElement& g);

struct ClosureResult {
  KernelSpec closed;
  std::size_t rounds = 0;  // alpha at which K^alpha = K^(alpha+1) = K^(alpha+2)
  bool converged = false;
  std::vector<std::string> stages;  // describe(K^alpha) for alpha = 0, 1, ...
  bool conditions_pass = false;     // closure re-checked against kernel_conditions
};

inline constexpr std::size_t closure_round_bound = 64;

/// Iterates the three staged rules (alpha = 0, 1, 2 mod 3: tminus 1/n, the
/// archimedean rule, truncation), each followed by convex generation, over the
/// generators of the model (family atoms; points and tail monomials).
ClosureResult kernel_closure(const KernelSpec& k, std::size_t check_budget = 64, std::uint64_t seed = 0);

struct PointwiseClosure {
  bool closed = true;
  std::string family;   // which structured family produced the witness
  std::string witness;  // the sup that escapes K
  std::optional<seq::TailElement> tail_witness;
  std::size_t candidates = 0;
  /// closed == kernel_conditions(...).all_pass()
  bool agrees_with_conditions = false;
};

/// Searches structured families inside K with pointwise sup outside K:
/// support filtrations g * chi(first n points), g tminus 1/n, truncation
/// sequences and good-sequence partial sums.
PointwiseClosure pointwise_closed(const KernelSpec& k, std::size_t budget, std::uint64_t seed);

/// For each r in the grid, the union over the filtration g * chi{1..n} of
/// {> r} equals {g > r}. g >= 0.
bool filtration_sup_check(const seq::TailElement& g, const std::vector<Rational>& cuts);

}  // namespace trunclab::kernel
