#pragma once

#include <cstdint>
#include <random>

#include "trunclab/rational.hpp"

namespace trunclab {

/// Seeded source of small exact rationals. The same seed always yields the
/// same stream, on every platform (mt19937_64 is fully specified; we avoid the
/// std distributions, whose output is implementation-defined).
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }
  bool coin(std::uint64_t num = 1, std::uint64_t den = 2) { return next() % den < num; }

  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(std::int64_t max_num = 6, std::int64_t max_den = 4) {
    Rational q(static_cast<long>(uniform(-max_num, max_num)), static_cast<unsigned long>(uniform(1, max_den)));
    q.canonicalize();
    return q;
  }
  Rational nonnegative(std::int64_t max_num = 6, std::int64_t max_den = 4) { return abs(rational(max_num, max_den)); }
  Rational positive(std::int64_t max_num = 6, std::int64_t max_den = 4) {
    Rational q(static_cast<long>(uniform(1, max_num)), static_cast<unsigned long>(uniform(1, max_den)));
    q.canonicalize();
    return q;
  }
  /// Value in [0,1].
  Rational unit(std::int64_t max_den = 6) {
    const auto den = uniform(1, max_den);
    Rational q(static_cast<long>(uniform(0, den)), static_cast<unsigned long>(den));
    q.canonicalize();
    return q;
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace trunclab
