#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace renyi {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact value of a finite double.
Rational exact_rational(double x);

// Parses "p/q", an integer, or a decimal literal ("0.125", "-3.5e-2").
// Decimal literals are converted exactly (0.1 becomes 1/10, not the double).
Rational parse_rational(std::string_view text);

// True when `text` looks like "p/q" or an integer, i.e. it has no decimal
// point or exponent.
bool is_fraction_literal(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);
double to_double(const Rational& r);

BigInt floor(const Rational& r);

}  // namespace renyi
