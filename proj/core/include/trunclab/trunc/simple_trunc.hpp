#pragma once

#include <optional>
#include <vector>

#include "trunclab/boolean/algebra.hpp"
#include "trunclab/trunc/simple_element.hpp"

namespace trunclab::trunc {

/// One summand r * chi(U) of a normal form.
struct NormalTerm {
  Rational coeff;
  Subset component;
  friend bool operator==(const NormalTerm&, const NormalTerm&) = default;
};

/// Disjoint components, distinct nonzero coefficients, ordered by the lowest
/// point index of each component. Empty iff g = 0.
std::vector<NormalTerm> normal_form(const SimpleElement& g);
SimpleElement from_normal_form(const SpacePtr& space, const std::vector<NormalTerm>& terms);

/// The span of the characteristic functions of a family of subsets of the
/// non-star points that contains the empty set and is closed under union,
/// intersection and difference.
class SimpleTrunc {
public:
  /// Throws InvariantError naming the first missing set, or a set holding the star.
  SimpleTrunc(SpacePtr space, std::vector<Subset> family);

  const SpacePtr& space() const { return space_; }
  /// Sorted, duplicate-free.
  const std::vector<Subset>& family() const { return family_; }
  bool has_component(Subset s) const;
  /// Minimal nonempty members; every member is a disjoint union of these.
  std::vector<Subset> atoms() const;
  std::size_t dimension() const { return atoms().size(); }

private:
  SpacePtr space_;
  std::vector<Subset> family_;
};

/// All subsets of the non-star points unless a family is given.
SimpleTrunc lc(const SpacePtr& space, std::optional<std::vector<Subset>> family = std::nullopt);

/// The components as a generalized Boolean algebra; labels are space->format(set).
boolean::GeneralizedBooleanAlgebra uc(const SimpleTrunc& g);

struct Membership {
  bool member = false;
  std::vector<NormalTerm> normal_form;
  /// Set when member is false: a nonzero level set missing from the family.
  std::optional<Subset> offending_level_set;
};

Membership member(const SimpleTrunc& g, const SimpleElement& e);

/// (2u) truncated equals u. Throws PreconditionError for negative u.
bool is_unital_component(const SimpleElement& u);

/// Least nonzero value; 0 for the zero element. Throws for negative input.
Rational clearance(const SimpleElement& g);

struct ClearanceStep {
  SimpleElement rest;       // g1: g with the lowest level removed
  SimpleElement component;  // u: indicator of that lowest level
  Rational delta;           // clearance of g
};

/// Splits off the lowest level of g: g = rest + delta * component, with rest and
/// component disjoint. Requires 0 < g with all values in [0, 1].
ClearanceStep clearance_step(const SimpleElement& g);

}  // namespace trunclab::trunc
