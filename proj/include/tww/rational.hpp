#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace tww {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p/q", "p" or a finite decimal such as "2.5".
Rational parse_rational(const std::string& text);

// Always "p/q" with q > 0, e.g. "1/1".
std::string rational_to_string(const Rational& value);

inline Rational max_rational(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace tww
