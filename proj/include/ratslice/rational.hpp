#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace ratslice {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "a" or "a/b" with optional sign; b must be nonzero.
Rational parse_rational(std::string_view text);

// Always "a/b" in lowest terms, b > 0.
std::string format_rational(const Rational& value);

Rational make_rational(long long num, long long den = 1);

BigInt floor_of(const Rational& value);
BigInt ceil_of(const Rational& value);
bool is_integer(const Rational& value);

// Representative in [0, 1).
Rational frac_part(const Rational& value);

Rational abs_of(const Rational& value);

// Narrowing with a range check; throws InputError.
long long to_int64(const Rational& value, std::string_view what);

}  // namespace ratslice
