#include "trunclab/trunc/sequences.hpp"

#include "trunclab/error.hpp"

namespace trunclab::trunc {

namespace {

std::int64_t stable_index(const SimpleElement& g) {
  Rational top = g.max_value();
  return top <= 1 ? 1 : ceil_to_int(top);
}

void strip_zeros(std::vector<SimpleElement>& terms) {
  while (!terms.empty() && terms.back().is_zero()) terms.pop_back();
}

}  // namespace

GoodSequence good_from_element(const SimpleElement& g, std::optional<std::int64_t> m) {
  if (!g.is_nonnegative()) throw PreconditionError("good_from_element needs a nonnegative element");
  const std::int64_t need = g.is_zero() ? 0 : ceil_to_int(g.max_value());
  const std::int64_t count = m.value_or(need);
  if (count < need) {
    throw PreconditionError("term count " + std::to_string(count) + " is too small; need m >= " +
                            std::to_string(need));
  }
  GoodSequence f{g.space(), {}};
  for (std::int64_t n = 1; n <= count; ++n) f.terms.push_back(truncate(tminus(g, Rational(n - 1))));
  strip_zeros(f.terms);
  return f;
}

GoodSequenceCheck check_good_sequence(const GoodSequence& f) {
  SimpleElement zero(f.space);
  for (std::size_t k = 0; k < f.terms.size(); ++k) {
    const auto& t = f.terms[k];
    require_same_space(zero, t);
    if (!t.is_nonnegative() || !(truncate(t) == t)) return {false, k + 1, "term has a value outside [0,1]"};
    const auto& next = k + 1 < f.terms.size() ? f.terms[k + 1] : zero;
    if (!next.leq(t)) return {false, k + 1, "terms increase after this index"};
    if (!(truncate(t + next) == t)) return {false, k + 1, "f_n != truncate(f_n + f_{n+1})"};
  }
  return {};
}

SimpleElement element_from_good(const GoodSequence& f) {
  auto chk = check_good_sequence(f);
  if (!chk.ok) throw InvariantError("not a good sequence at index " + std::to_string(chk.index) + ": " + chk.reason);
  SimpleElement g(f.space);
  for (const auto& t : f.terms) g = g + t;
  return g;
}

std::vector<SimpleElement> truncation_sequence(const SimpleElement& g) {
  if (!g.is_nonnegative()) throw PreconditionError("truncation sequence needs a nonnegative element");
  std::vector<SimpleElement> out;
  const auto m = stable_index(g);
  for (std::int64_t n = 1; n <= m; ++n) out.push_back(truncN(g, Rational(n)));
  return out;
}

TruncationSequenceResult truncation_sequence_check(const SpacePtr& space, const std::vector<SimpleElement>& seq) {
  TruncationSequenceResult r;
  if (seq.empty()) {
    r.ok = true;
    r.element = SimpleElement(space);
    return r;
  }
  SimpleElement zero(space);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    require_same_space(zero, seq[k]);
    if (!seq[k].is_nonnegative()) {
      r.index = k + 1;
      r.reason = "term has a negative value";
      return r;
    }
  }
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    const Rational n(static_cast<long>(k + 1));
    if (!(truncN(seq[k + 1], n) == seq[k])) {
      r.index = k + 1;
      r.reason = "g_" + std::to_string(k + 1) + " != g_" + std::to_string(k + 2) + " truncN " + std::to_string(k + 1);
      return r;
    }
  }
  const auto& last = seq.back();
  if (last.max_value() > Rational(static_cast<long>(seq.size()))) {
    r.index = seq.size();
    r.reason = "last term is not stable (max value exceeds its index)";
    return r;
  }
  r.ok = true;
  r.element = last;
  r.differences.push_back(seq.front());
  for (std::size_t k = 1; k < seq.size(); ++k) r.differences.push_back(seq[k] - seq[k - 1]);
  strip_zeros(r.differences);
  return r;
}

}  // namespace trunclab::trunc
