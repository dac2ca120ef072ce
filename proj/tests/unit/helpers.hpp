#pragma once

#include <string>
#include <vector>

#include "trunclab/rational.hpp"
#include "trunclab/trunc/simple_element.hpp"

namespace testing_helpers {

using trunclab::Rational;

inline Rational q(const char* s) { return trunclab::parse_rational(s); }

/// X3 = ({*,1,2,3}, *)
inline trunclab::boolean::SpacePtr x3() { return trunclab::boolean::make_space({"*", "1", "2", "3"}, "*"); }

/// Element on X3 from its values at 1, 2, 3.
inline trunclab::trunc::SimpleElement el(const trunclab::boolean::SpacePtr& s, std::vector<const char*> vals) {
  std::vector<Rational> v;
  for (auto* t : vals) v.push_back(q(t));
  return trunclab::trunc::SimpleElement::from_tuple(s, v);
}

}  // namespace testing_helpers
