#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace surfcoh {

// Coefficients and multiplicities are arbitrary-precision integers: the
// binomials binom(2g, g-k) entering the genus pipelines overflow 64 bits
// around g = 34, and the CLI accepts any genus.
using Int = boost::multiprecision::cpp_int;

// Cohomological degrees and shifts.
using Degree = std::int64_t;

// Exact binomial coefficient, zero outside 0 <= k <= n.
Int binomial(std::uint64_t n, std::uint64_t k);

// 2^n as an exact integer.
Int pow2(std::uint64_t n);

// (-1)^d as an int, valid for negative d as well.
inline int parity_sign(Degree d) { return (d % 2 == 0) ? 1 : -1; }

}  // namespace surfcoh
