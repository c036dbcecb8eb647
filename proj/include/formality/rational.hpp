#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace formality {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar: always reduced, denominator > 0 (maintained by the
// backend's canonical form).
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" with q > 0. Throws std::invalid_argument on
// anything else.
Rational parse_rational(const std::string& token);

std::string to_string(const Rational& value);

}  // namespace formality
