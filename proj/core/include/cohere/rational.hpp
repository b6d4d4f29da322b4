#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cohere {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator. Every probability value in the engine is one of these.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses `p/q`, an integer, or a finite decimal such as `0.125` into an
/// exact value. Throws std::invalid_argument on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// `p/q` or `p` when the denominator is 1.
std::string to_string(const Rational& value);

inline bool in_unit_interval(const Rational& value) {
  return value >= 0 && value <= 1;
}

}  // namespace cohere
