#pragma once

#include <cstdint>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace aspectsearch {

using BigInt = boost::multiprecision::cpp_int;

/// Floored modulo: a mod b = a - floor(a/b)*b, always in [0, b).
/// The builtin % truncates toward zero and goes negative for negative a,
/// which is the wrong convention for index arithmetic on the circle.
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

/// Reflection of index j about index i on {0, ..., n-1}: (2i - j) mod n.
/// Restricted to j != i it is a permutation of {0..n-1} \ {i} and its own
/// inverse. Querying the fixed point j == i throws FixedPointQuery.
std::int64_t reflect_index(std::int64_t i, std::int64_t j, std::int64_t n);

/// Stride map j -> q*j mod r on {0, ..., r-1}. Requires gcd(q, r) = 1,
/// which makes it a permutation; otherwise throws NotCoprime.
std::int64_t stride_index(std::int64_t q, std::int64_t j, std::int64_t r);

/// Row-major pairing (u, v) -> u + a*v for 0 <= u < a, v >= 0.
std::int64_t pair_index(std::int64_t u, std::int64_t v, std::int64_t a);

/// Inverse of pair_index: w -> (w mod a, floor(w/a)).
std::pair<std::int64_t, std::int64_t> unpair_index(std::int64_t w,
                                                   std::int64_t a);

/// k!! = k(k-2)(k-4)...1 for odd k >= 1; 0!! = (-1)!! = 1 (empty product).
/// Exact arbitrary-precision result; (2p-1)!! overflows 64 bits near p = 17.
BigInt double_factorial(std::int64_t k);

}  // namespace aspectsearch
