#include "trunclab/rational.hpp"

#include <limits>

#include "trunclab/error.hpp"

namespace trunclab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  auto num = s.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw StructuralError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den.front() == '+' ? den.substr(1) : den), 10);
  if (d == 0) throw StructuralError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational floor(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

Rational ceil(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

namespace {

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw PreconditionError("integer out of machine range: " + z.get_str());
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace

std::int64_t ceil_to_int(const Rational& q) { return to_int64(ceil(q).get_num()); }
std::int64_t floor_to_int(const Rational& q) { return to_int64(floor(q).get_num()); }

const Rational& ExtRational::value() const {
  if (kind_ != Kind::finite) throw PreconditionError("value() of an infinite extended rational");
  return value_;
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtRational::Kind::finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.kind_ != ExtRational::Kind::finite) return std::strong_ordering::equal;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

ExtRational parse_ext_rational(std::string_view text) {
  auto s = trim(text);
  if (s == "inf" || s == "+inf") return ExtRational::pos_infinity();
  if (s == "-inf") return ExtRational::neg_infinity();
  return ExtRational(parse_rational(s));
}

std::string to_string(const ExtRational& q) {
  switch (q.kind()) {
    case ExtRational::Kind::neg_inf:
      return "-inf";
    case ExtRational::Kind::pos_inf:
      return "inf";
    default:
      return to_string(q.value());
  }
}

}  // namespace trunclab
