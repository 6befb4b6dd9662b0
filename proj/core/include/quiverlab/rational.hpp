#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace quiverlab {

// Exact scalar used throughout. Overflow-free; every echelon form, kernel and
// pairing in the library is computed over this field.
using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "-3", "2/5", "-7/4". Whitespace is not allowed. Returns nullopt
// on malformed input or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace quiverlab
