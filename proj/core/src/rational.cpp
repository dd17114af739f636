#include "subcur/rational.hpp"

#include "subcur/error.hpp"

#include <cctype>

namespace subcur {

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw Error(ErrorKind::Parse, "bad rational '" + std::string(whole) + "'");
  Integer result = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorKind::Parse, "bad rational '" + std::string(whole) + "'");
    }
    result = result * 10 + (text[i] - '0');
  }
  return negative ? Integer(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace subcur
