#pragma once

#include <algorithm>

#include "trunclab/frame/real.hpp"
#include "trunclab/seqspace/seq_trunc.hpp"
#include "trunclab/trunc/simple_element.hpp"

// One spelling of the trunc operations for all three models, so identities
// are written once.
namespace trunclab::props {

inline trunc::SimpleElement ap(const Op& o, const trunc::SimpleElement& a) { return trunc::apply_op(o, a); }
inline trunc::SimpleElement ap(const Op& o, const trunc::SimpleElement& a, const trunc::SimpleElement& b) {
  return trunc::apply_op(o, a, b);
}
inline seq::TailElement ap(const Op& o, const seq::TailElement& a) { return seq::tail_apply_op(o, a); }
inline seq::TailElement ap(const Op& o, const seq::TailElement& a, const seq::TailElement& b) {
  return seq::tail_apply_op(o, a, b);
}
inline frame::FrameReal ap(const Op& o, const frame::FrameReal& a) { return frame::induced_op(o, a); }
inline frame::FrameReal ap(const Op& o, const frame::FrameReal& a, const frame::FrameReal& b) {
  return frame::induced_op(o, a, b);
}

template <class E>
bool le(const E& a, const E& b) {
  return ap(Op::meet(), a, b) == a;
}

template <class E>
bool is_zero_elem(const E& g) {
  return ap(Op::scale(0), g) == g;
}

inline std::string show(const trunc::SimpleElement& g) { return g.tuple_string(); }
inline std::string show(const seq::TailElement& g) { return g.to_string(); }
inline std::string show(const frame::FrameReal& g) { return g.to_string(); }

/// Largest value of a nonnegative element.
inline Rational top_value(const trunc::SimpleElement& g) { return std::max(Rational(0), g.max_value()); }
inline Rational top_value(const seq::TailElement& g) { return seq::supremum_from(g, 1); }
inline Rational top_value(const frame::FrameReal& g) {
  Rational m = 0;
  for (const auto& c : g.cells()) m = std::max(m, c.value.value());
  return m;
}

}  // namespace trunclab::props
