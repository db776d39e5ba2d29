#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "streamsub/types.hpp"

namespace streamsub {

// Exact rationals.  Thresholds are exact powers like (1+eps)^i whose
// numerators overflow 64-bit (and their cross-products overflow 128-bit) at
// perfectly ordinary desk scale, so arbitrary precision is the safe default.
// Function values stay Val; they are promoted here only for comparisons.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(Val n) { return Rat(n); }
inline Rat rat(Val n, Val d) { return Rat(n, d); }

double to_double(const Rat& r);

// base^e for integer e (negative allowed).  base must be nonzero for e < 0.
Rat rat_pow(const Rat& base, long e);

// Accepts "3/4", "-2", "0.25", "1e-3"-free plain decimals.  Exact: "0.25"
// becomes 1/4.  Throws PreconditionError on anything else.
Rat parse_rat(const std::string& text);

// Canonical "num/den" (or plain integer) rendering, exact.
std::string rat_to_string(const Rat& r);

}  // namespace streamsub
