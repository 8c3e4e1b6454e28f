#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ordim {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "a", "a/b", or "-a/b". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

} // namespace ordim
