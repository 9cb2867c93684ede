#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace eitff {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "num/den" with the denominator omitted when it is 1.
std::string to_fraction_string(const Rational& q);
Rational parse_fraction(const std::string& text);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

} // namespace eitff
