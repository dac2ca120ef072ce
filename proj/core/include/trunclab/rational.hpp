#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace trunclab {

/// Exact rational scalar. Every value handled by the library is one of these;
/// no floating point appears anywhere in the arithmetic.
using Rational = mpq_class;

/// Parses "p", "-p", "p/q" (whitespace-trimmed) into lowest terms.
/// Throws StructuralError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering; "/1" is suppressed.
std::string to_string(const Rational& q);

Rational floor(const Rational& q);
Rational ceil(const Rational& q);
Rational abs(const Rational& q);

/// Nonnegative integer ceiling as a machine integer. Throws if it does not fit.
std::int64_t ceil_to_int(const Rational& q);
std::int64_t floor_to_int(const Rational& q);

/// Rational extended by -inf and +inf, the value range of extended frame reals.
class ExtRational {
public:
  enum class Kind { neg_inf, finite, pos_inf };

  ExtRational() = default;
  ExtRational(Rational value) : kind_(Kind::finite), value_(std::move(value)) {}  // NOLINT

  static ExtRational neg_infinity() { return ExtRational(Kind::neg_inf); }
  static ExtRational pos_infinity() { return ExtRational(Kind::pos_inf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  const Rational& value() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

private:
  explicit ExtRational(Kind k) : kind_(k) {}

  Kind kind_ = Kind::finite;
  Rational value_ = 0;
};

/// Accepts everything parse_rational does plus "inf", "+inf", "-inf".
ExtRational parse_ext_rational(std::string_view text);
std::string to_string(const ExtRational& q);

}  // namespace trunclab
