#include "ratslice/rational.hpp"

#include <cctype>
#include <limits>

#include "ratslice/error.hpp"

namespace ratslice {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw InputError("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = trim(text);
  auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(body, text));
  }
  BigInt num = parse_integer(trim(body.substr(0, slash)), text);
  std::string_view den_text = trim(body.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InputError("malformed rational '" + std::string(text) + "': signed denominator");
  }
  BigInt den = parse_integer(den_text, text);
  if (den == 0) {
    throw InputError("malformed rational '" + std::string(text) + "': zero denominator");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational make_rational(long long num, long long den) {
  if (den == 0) throw InputError("zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

BigInt floor_of(const Rational& value) {
  BigInt n = numerator(value);
  BigInt d = denominator(value);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

BigInt ceil_of(const Rational& value) {
  BigInt n = numerator(value);
  BigInt d = denominator(value);
  BigInt q = n / d;
  if (n % d != 0 && n > 0) q += 1;
  return q;
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

Rational frac_part(const Rational& value) { return value - Rational(floor_of(value)); }

Rational abs_of(const Rational& value) { return value < 0 ? Rational(-value) : value; }

long long to_int64(const Rational& value, std::string_view what) {
  if (!is_integer(value)) {
    throw InputError(std::string(what) + " is not an integer: " + format_rational(value));
  }
  BigInt n = numerator(value);
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min()) {
    throw InputError(std::string(what) + " out of range");
  }
  return n.convert_to<long long>();
}

}  // namespace ratslice
