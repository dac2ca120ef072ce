#pragma once

#include <cstdint>
#include <vector>

#include "trunclab/kernel/kernel.hpp"
#include "trunclab/seqspace/seq_trunc.hpp"

namespace trunclab::seq {

/// The battery run on the degree-1 trunc over omega+1 and the convex subtrunc
/// K = {tail 0}, which meets conditions (1) and (2) but not (3).
struct Ex1Report {
  // g0 = 1/n has no positive lower bound on its support.
  TailBoundedAway g0_bounded_away;
  std::vector<Rational> g0_values;  // g0(1..5)
  // Not simple: g0 is in the trunc but outside its simple part, and no unital
  // component dominates truncate(g0).
  bool g0_in_trunc = false;
  bool g0_simple = true;
  EnoughUc enough_uc;
  SeqHyperResult hyperarchimedean;
  kernel::KernelConditions conditions;
  TailElement g0_tminus_third;
  /// g0 tminus 1/n lies in K for n = 1..20 (spot check of the closed form).
  bool tminus_family_in_k = false;
  kernel::PointwiseClosure pointwise;

  bool not_bounded_away() const { return !g0_bounded_away.bounded_away; }
  bool not_simple() const { return g0_in_trunc && !g0_simple && !enough_uc.verdict; }
  bool kernel_12_hold() const { return conditions.archimedean.pass && conditions.truncation.pass; }
  bool kernel_3_fails_at_g0() const;
  bool not_pointwise_closed_at_g0() const;
  bool all_as_expected() const;
};

Ex1Report ex1_report(std::size_t budget = 500, std::uint64_t seed = 0);

}  // namespace trunclab::seq
