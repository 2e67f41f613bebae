#include "mdh/exponent.hpp"

#include "mdh/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <ostream>

namespace mdh {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("cannot parse rational '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

Exponent::Exponent(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("zero denominator in exponent");
  value_ = Rational(numerator, denominator);
}

Exponent Exponent::infinity() {
  Exponent e;
  e.infinite_ = true;
  e.value_ = Rational(0);
  return e;
}

const Rational& Exponent::value() const {
  if (infinite_) throw DomainError("infinite exponent has no rational value");
  return value_;
}

double Exponent::to_double() const {
  if (infinite_) return HUGE_VAL;
  return static_cast<double>(value_.numerator()) / static_cast<double>(value_.denominator());
}

std::string Exponent::to_string() const {
  if (infinite_) return "inf";
  return rational_to_string(value_);
}

Exponent Exponent::parse(std::string_view text) {
  const auto t = trim(text);
  if (t == "inf" || t == "+inf" || t == "infinity" || t == "∞") return infinity();
  return Exponent(parse_rational(t));
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const Exponent& a, const Exponent& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering exponent_compare(const Exponent& a, const Exponent& b) { return a <=> b; }

std::ostream& operator<<(std::ostream& os, const Exponent& e) { return os << e.to_string(); }

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  const auto t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  const auto num = parse_integer(trim(t.substr(0, slash)), text);
  const auto den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace mdh
