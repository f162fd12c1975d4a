#include "pebbling/rational.hpp"

#include <charconv>

#include "pebbling/error.hpp"

namespace pebbling {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last)
        throw Error(ErrorKind::InvalidRational, "cannot parse '" + std::string(whole) + "'");
    return value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    std::int64_t num = parse_int(text.substr(0, slash), text);
    std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::InvalidRational, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    if (value.denominator() == 1) return std::to_string(value.numerator());
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

std::string to_decimal_string(const Rational& value) {
    std::int64_t den = value.denominator();
    int twos = 0, fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1) return to_string(value);
    int digits = std::max(twos, fives);
    if (digits == 0) return std::to_string(value.numerator());

    // scale to an integer number of 10^-digits units
    std::int64_t scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rational scaled = value * Rational(scale);
    std::int64_t units = scaled.numerator();
    bool negative = units < 0;
    if (negative) units = -units;
    std::string frac = std::to_string(units % scale);
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string out = negative ? "-" : "";
    out += std::to_string(units / scale);
    if (!frac.empty()) out += "." + frac;
    return out;
}

std::int64_t floor(const Rational& value) {
    std::int64_t q = value.numerator() / value.denominator();
    if (value.numerator() % value.denominator() != 0 && value.numerator() < 0) --q;
    return q;
}

Rational pow2(int exponent) {
    if (exponent >= 0) return Rational(std::int64_t{1} << exponent);
    return Rational(1, std::int64_t{1} << -exponent);
}

} // namespace pebbling
