#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace antimagic {

// Labels and vertex sums are exact; nothing in the library compares with an epsilon.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "12", "-3", "0.75", "+1.5", "3/8". Decimals convert exactly.
// Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

// Canonical exact form: "7", "-7", "3/4".
std::string to_string(const Rational& value);

}  // namespace antimagic
