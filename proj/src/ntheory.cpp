#include "aspectsearch/ntheory.hpp"

#include <numeric>
#include <string>

#include "aspectsearch/errors.hpp"

namespace aspectsearch {

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  if (b < 1) {
    throw NonPositiveModulus("floor_mod: modulus must be positive, got " +
                             std::to_string(b));
  }
  const std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

std::int64_t reflect_index(std::int64_t i, std::int64_t j, std::int64_t n) {
  if (n < 1 || i < 0 || i >= n || j < 0 || j >= n) {
    throw IndexOutOfRange("reflect_index: need 0 <= i,j < n");
  }
  if (j == i) {
    throw FixedPointQuery("reflect_index: j == i is excluded from the domain");
  }
  return floor_mod(2 * i - j, n);
}

std::int64_t stride_index(std::int64_t q, std::int64_t j, std::int64_t r) {
  if (q < 1 || r < 1) {
    throw IndexOutOfRange("stride_index: q and r must be positive");
  }
  if (std::gcd(q, r) != 1) {
    throw NotCoprime("stride_index: gcd(" + std::to_string(q) + ", " +
                     std::to_string(r) + ") != 1, map is not a bijection");
  }
  if (j < 0 || j >= r) {
    throw IndexOutOfRange("stride_index: need 0 <= j < r");
  }
  return floor_mod(q * j, r);
}

std::int64_t pair_index(std::int64_t u, std::int64_t v, std::int64_t a) {
  if (a < 1 || u < 0 || u >= a || v < 0) {
    throw IndexOutOfRange("pair_index: need 0 <= u < a and v >= 0");
  }
  return u + a * v;
}

std::pair<std::int64_t, std::int64_t> unpair_index(std::int64_t w,
                                                   std::int64_t a) {
  if (a < 1 || w < 0) {
    throw IndexOutOfRange("unpair_index: need w >= 0 and a >= 1");
  }
  return {w % a, w / a};
}

BigInt double_factorial(std::int64_t k) {
  if (k == 0 || k == -1) return 1;
  if (k < -1 || k % 2 == 0) {
    throw std::invalid_argument(
        "double_factorial: defined for odd k and k in {0, -1}, got " +
        std::to_string(k));
  }
  BigInt product = 1;
  for (std::int64_t f = k; f >= 3; f -= 2) product *= f;
  return product;
}

}  // namespace aspectsearch
