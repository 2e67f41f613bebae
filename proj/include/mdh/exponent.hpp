#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mdh {

using Rational = boost::rational<std::int64_t>;

/// An element of the exponent field (exact rationals) extended by +infinity.
///
/// Finite values are kept in lowest terms with a positive denominator, so two
/// exponents are equal iff their stored representations are equal. Infinity
/// compares greater than every finite value. Range restrictions such as
/// "exponent >= 1" are checked by the operations that need them, so that
/// out-of-range inputs can still be represented and reported.
class Exponent {
 public:
  Exponent() = default;
  Exponent(std::int64_t value) : value_(value) {}  // NOLINT: implicit from integers
  Exponent(std::int64_t numerator, std::int64_t denominator);
  Exponent(const Rational& value) : value_(value) {}  // NOLINT

  static Exponent infinity();

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Exact value; throws DomainError when infinite.
  const Rational& value() const;
  std::int64_t numerator() const { return value().numerator(); }
  std::int64_t denominator() const { return value().denominator(); }

  /// +HUGE_VAL for infinity.
  double to_double() const;

  /// "p/q", "p" when the denominator is 1, or "inf".
  std::string to_string() const;

  /// Accepts "p/q", "p", "inf", "+inf", "infinity" and "∞" (surrounding
  /// whitespace allowed). Throws InputError on anything else.
  static Exponent parse(std::string_view text);

  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);
  friend bool operator==(const Exponent& a, const Exponent& b);

 private:
  Rational value_{1};
  bool infinite_ = false;
};

std::strong_ordering exponent_compare(const Exponent& a, const Exponent& b);

inline const Exponent& min(const Exponent& a, const Exponent& b) { return b < a ? b : a; }
inline const Exponent& max(const Exponent& a, const Exponent& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Exponent& e);

std::string rational_to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace mdh
