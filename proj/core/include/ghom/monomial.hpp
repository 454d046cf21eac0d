#pragma once

#include <cstdint>
#include <vector>

#include "ghom/error.hpp"

namespace ghom {

// Exponent vector; length must equal the ambient variable count.
using Monomial = std::vector<std::int32_t>;

inline int mono_degree(const Monomial& m) {
  int s = 0;
  for (int e : m) s += e;
  return s;
}

inline bool mono_is_one(const Monomial& m) {
  for (int e : m)
    if (e != 0) return false;
  return true;
}

// Graded reverse lexicographic order: higher total degree first; ties broken
// by the smaller exponent in the last differing variable, scanning from the
// last variable. Returns +1 if a > b, 0 if equal, -1 if a < b.
int grevlex_cmp(const Monomial& a, const Monomial& b);

bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b; requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);

// All monomials of the given total degree, in a fixed deterministic order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

long long binom(long long n, long long k);

}  // namespace ghom
