#pragma once

#include <bit>
#include <cstdint>

#include "ramsey/errors.hpp"

namespace ramsey {

// Exact unsigned arithmetic for threshold evaluation. Thresholds are integer
// valued by construction, so everything here is integer math; any value that
// does not fit 64 bits raises CapacityError instead of wrapping.

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("integer overflow in +");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("integer overflow in *");
  return r;
}

// max(0, a - b); thresholds live in the naturals.
inline std::uint64_t truncated_sub(std::uint64_t a, std::uint64_t b) {
  return a > b ? a - b : 0;
}

// ceil(p*x/q), q > 0. The product is taken in 128 bits; the result must fit
// 64. (p*x + q-1 cannot overflow 128 bits for 64-bit inputs.)
inline std::uint64_t scaled_ceil(std::uint64_t p, std::uint64_t q, std::uint64_t x) {
  const unsigned __int128 r = ((unsigned __int128)p * x + (q - 1)) / q;
  if (r > UINT64_MAX) throw CapacityError("integer overflow in ceil(p/q * x)");
  return static_cast<std::uint64_t>(r);
}

// floor(p*x/q), q > 0.
inline std::uint64_t scaled_floor(std::uint64_t p, std::uint64_t q, std::uint64_t x) {
  const unsigned __int128 r = (unsigned __int128)p * x / q;
  if (r > UINT64_MAX) throw CapacityError("integer overflow in floor(p/q * x)");
  return static_cast<std::uint64_t>(r);
}

// ceil(log2 x) with ceil_log2(0) = ceil_log2(1) = 0.
inline std::uint64_t ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(x - 1));
}

inline std::uint64_t floor_sqrt(std::uint64_t x) {
  if (x == 0) return 0;
  // Float seed, then exact integer correction (sqrt(double) can be off by
  // one ulp near 2^64).
  auto r = static_cast<std::uint64_t>(__builtin_sqrt(static_cast<double>(x)));
  while (r > 0 && (unsigned __int128)r * r > x) --r;
  while ((unsigned __int128)(r + 1) * (r + 1) <= x) ++r;
  return r;
}

inline std::uint64_t ceil_sqrt(std::uint64_t x) {
  const std::uint64_t r = floor_sqrt(x);
  return r * r == x ? r : r + 1;
}

}  // namespace ramsey
