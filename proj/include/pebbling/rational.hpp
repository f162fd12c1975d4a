#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace pebbling {

// Exact weights and ratios. Magnitudes stay far below 2^62 for every graph we handle.
using Rational = boost::rational<std::int64_t>;

Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when integral.
std::string to_string(const Rational& value);

// Exact decimal when the denominator is 2^a 5^b ("26.6", "29.25"), otherwise "p/q".
std::string to_decimal_string(const Rational& value);

std::int64_t floor(const Rational& value);

// 2^e for any integer e.
Rational pow2(int exponent);

} // namespace pebbling
