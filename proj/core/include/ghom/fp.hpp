#pragma once

#include <cstdint>

namespace ghom {

// Arithmetic in F_p with values normalized to [0, p). p is an odd prime
// below 2^31, so products fit in int64 without overflow.

inline std::int64_t fp_norm(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::int64_t fp_add(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::int64_t fp_sub(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t s = a - b;
  return s < 0 ? s + p : s;
}

inline std::int64_t fp_neg(std::int64_t a, std::int64_t p) { return a == 0 ? 0 : p - a; }

inline std::int64_t fp_mul(std::int64_t a, std::int64_t b, std::int64_t p) { return (a * b) % p; }

inline std::int64_t fp_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = fp_norm(a, p);
  while (e > 0) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::int64_t fp_inv(std::int64_t a, std::int64_t p) { return fp_pow(a, p - 2, p); }

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

}  // namespace ghom
