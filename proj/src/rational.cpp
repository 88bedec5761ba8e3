#include "stochcube/rational.hpp"

#include <cctype>

#include "stochcube/errors.hpp"

namespace stochcube {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Rational parse_rational(std::string_view text) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto first = text.find_first_not_of(kSpace);
  if (first == std::string_view::npos) throw ParseError("empty rational literal");
  const auto last = text.find_last_not_of(kSpace);
  const std::string_view body = text.substr(first, last - first + 1);

  std::size_t pos = 0;
  bool negative = false;
  if (body[pos] == '+' || body[pos] == '-') {
    negative = body[pos] == '-';
    ++pos;
  }

  const auto take_digits = [&]() -> std::string_view {
    const std::size_t start = pos;
    while (pos < body.size() && is_digit(body[pos])) ++pos;
    return body.substr(start, pos - start);
  };
  const auto malformed = [&]() -> ParseError {
    return ParseError("malformed rational literal '" + std::string(text) + "'");
  };

  const std::string_view int_part = take_digits();
  if (int_part.empty()) throw malformed();

  Integer numerator{std::string(int_part)};
  Integer denominator{1};

  if (pos < body.size() && body[pos] == '.') {
    ++pos;
    const std::string_view frac = take_digits();
    if (frac.empty() || pos != body.size()) throw malformed();
    for (char c : frac) {
      numerator = numerator * 10 + (c - '0');
      denominator *= 10;
    }
  } else if (pos < body.size() && body[pos] == '/') {
    ++pos;
    const std::string_view den = take_digits();
    if (den.empty() || pos != body.size()) throw malformed();
    denominator = Integer{std::string(den)};
    if (denominator == 0) {
      throw ParseError("zero denominator in rational literal '" + std::string(text) + "'");
    }
  } else if (pos != body.size()) {
    throw malformed();
  }

  if (negative) numerator = -numerator;
  return Rational{numerator, denominator};
}

std::string format_rational(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer rational_floor(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  Integer quotient = num / den;  // truncates toward zero
  if (num < 0 && quotient * den != num) --quotient;
  return quotient;
}

}  // namespace stochcube
