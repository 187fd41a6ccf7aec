#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace prolong {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// cpp_rational keeps values in lowest terms with a positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Serializes as "p/q" in lowest terms, or "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

/// Parses "p" or "p/q" (q > 0 after normalization). Throws on malformed input.
Rat rat_parse(std::string_view s);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

}  // namespace prolong
