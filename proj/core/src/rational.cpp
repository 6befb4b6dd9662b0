#include "quiverlab/rational.hpp"

#include <cctype>

namespace quiverlab {

namespace {

bool parse_integer(std::string_view text, boost::multiprecision::cpp_int& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) return false;
  boost::multiprecision::cpp_int value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
    value *= 10;
    value += text[pos] - '0';
  }
  out = negative ? -value : value;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  boost::multiprecision::cpp_int num, den = 1;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return std::nullopt;
  } else {
    if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  std::string text = numerator(value).str();
  if (denominator(value) != 1) {
    text += '/';
    text += denominator(value).str();
  }
  return text;
}

}  // namespace quiverlab
