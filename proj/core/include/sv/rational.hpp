#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "sv/errors.hpp"

namespace sv {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision integer parts. Always canonical:
// gcd(|num|, den) = 1 and den > 0 (maintained by the backend).
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Rat& q) { return q.sign(); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// base^e for any integer e; e < 0 requires base != 0.
Rat pow_int(const Rat& base, long long e);

// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rat& q);

// Accepts "n", "n/d", optional leading sign and surrounding whitespace.
Rat parse_rat(std::string_view text);

} // namespace sv
