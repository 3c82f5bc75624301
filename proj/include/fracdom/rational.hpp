#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace fracdom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms, plain "p" when the value is an integer.
std::string to_fraction_string(const Rational& r);

// Accepts "p", "-p", "p/q", "-p/q" with q > 0 digits only. Rejects anything else.
Rational fraction_from_string(const std::string& text);

}  // namespace fracdom
