#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace subcur {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms; integers are written without a denominator.
std::string to_string(const Rational& value);

// Accepts "p", "-p" and "p/q". Throws Error(Parse) on anything else or q == 0.
Rational parse_rational(std::string_view text);

}  // namespace subcur
