#ifndef HILBNUM_CHECKED_HPP
#define HILBNUM_CHECKED_HPP

#include <concepts>
#include <cstdint>

#include "hilbnum/errors.hpp"

namespace hilbnum {

using Coefficient = std::int64_t;

template <typename T>
constexpr T checked_add(T a, T b) {
  T out{};
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("integer overflow in addition");
  return out;
}

template <typename T>
constexpr T checked_sub(T a, T b) {
  T out{};
  if (__builtin_sub_overflow(a, b, &out)) throw ArithmeticOverflow("integer overflow in subtraction");
  return out;
}

template <typename T>
constexpr T checked_mul(T a, T b) {
  T out{};
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("integer overflow in multiplication");
  return out;
}

// C(n, k) with overflow detection; zero when k > n.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // acc holds C(n - k + j, j) after step j, so every division is exact.
  unsigned __int128 acc = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    acc = acc * (n - k + j) / j;
    if (acc > UINT64_MAX) throw ArithmeticOverflow("binomial coefficient overflow");
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace hilbnum

#endif
