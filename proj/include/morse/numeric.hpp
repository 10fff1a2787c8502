#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace morse {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or a bare integer "p". Throws Errc::Format on anything else
/// and on a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q" with q >= 1, so integral values print as "3/1".
std::string format_rational(const Rational& value);

Integer parse_integer(std::string_view text);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// Non-negative gcd; gcd of an empty or all-zero list is 0.
Integer gcd_of(const std::vector<Integer>& values);
std::int64_t gcd_of(const std::vector<std::int64_t>& values);

}  // namespace morse
