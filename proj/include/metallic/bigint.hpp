#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace metallic {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k), zero whenever k < 0, n < 0 or k > n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// base^e with 0^0 = 1.
inline BigInt ipow(const BigInt& base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

/// Fibonacci numbers with F_0 = 0, F_1 = F_2 = 1.
inline BigInt fibonacci(unsigned n) {
  BigInt x = 0, y = 1;
  for (unsigned i = 0; i < n; ++i) {
    BigInt t = x + y;
    x = y;
    y = t;
  }
  return x;
}

}  // namespace metallic
