#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trunclab/trunc/simple_element.hpp"

namespace trunclab::trunc {

/// Finite list of terms, implicitly continued by zeros. Trailing zero terms
/// are never stored.
struct GoodSequence {
  SpacePtr space;
  std::vector<SimpleElement> terms;
};

/// Terms f_n = truncate(g tminus (n-1)) for n = 1..m. `m` defaults to the
/// ceiling of the largest value; a smaller m throws PreconditionError naming
/// the required bound. Throws for negative g.
GoodSequence good_from_element(const SimpleElement& g, std::optional<std::int64_t> m = std::nullopt);

struct GoodSequenceCheck {
  bool ok = true;
  std::size_t index = 0;  // 1-based term where a check failed
  std::string reason;
};

/// Values in [0,1], nonincreasing, f_n = truncate(f_n + f_{n+1}).
GoodSequenceCheck check_good_sequence(const GoodSequence& f);

/// Sum of the terms. Throws InvariantError with the failing index when the
/// sequence is not good.
SimpleElement element_from_good(const GoodSequence& f);

/// g truncN 1, ..., g truncN m with m = max(1, ceil(max g)); the last term is g.
std::vector<SimpleElement> truncation_sequence(const SimpleElement& g);

struct TruncationSequenceResult {
  bool ok = false;
  std::size_t index = 0;  // 1-based witness index when !ok
  std::string reason;
  std::optional<SimpleElement> element;
  /// g_1, g_2 - g_1, ... with trailing zeros dropped; equals good_from_element(g).
  std::vector<SimpleElement> differences;
};

/// Checks g_n = g_{n+1} truncN n for consecutive terms and that the last term is
/// already stable (max value <= its index). An empty list is the zero element.
TruncationSequenceResult truncation_sequence_check(const SpacePtr& space, const std::vector<SimpleElement>& seq);

}  // namespace trunclab::trunc
