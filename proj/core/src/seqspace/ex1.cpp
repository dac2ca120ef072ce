#include "trunclab/seqspace/ex1.hpp"

namespace trunclab::seq {

bool Ex1Report::kernel_3_fails_at_g0() const {
  return !conditions.tminus.pass && conditions.tminus.exact && conditions.tminus.tail_witness == g0() &&
         tminus_family_in_k;
}

bool Ex1Report::not_pointwise_closed_at_g0() const {
  return !pointwise.closed && pointwise.tail_witness == g0() && pointwise.agrees_with_conditions;
}

bool Ex1Report::all_as_expected() const {
  return not_bounded_away() && not_simple() && hyperarchimedean.verdict && kernel_12_hold() &&
         kernel_3_fails_at_g0() && not_pointwise_closed_at_g0();
}

Ex1Report ex1_report(std::size_t budget, std::uint64_t seed) {
  const SeqTrunc t(1);
  const auto k = kernel::SeqKernel::finite_support(t);
  const auto g = g0();
  Ex1Report r;
  r.g0_bounded_away = bounded_away_from_zero(g);
  for (std::int64_t n = 1; n <= 5; ++n) r.g0_values.push_back(g.value(n));
  r.g0_in_trunc = t.contains(g);
  r.g0_simple = simple_part_member(g);
  r.enough_uc = enough_uc_check(t, budget, seed);
  r.hyperarchimedean = hyperarchimedean(t, budget, seed);
  r.conditions = kernel::kernel_conditions(k, budget, seed);
  r.g0_tminus_third = tminus(g, Rational(1, 3));
  r.tminus_family_in_k = !k.contains(g);
  for (unsigned long n = 1; n <= 20; ++n) r.tminus_family_in_k = r.tminus_family_in_k && k.contains(tminus(g, Rational(1, n)));
  r.pointwise = kernel::pointwise_closed(k, budget, seed);
  return r;
}

}  // namespace trunclab::seq
