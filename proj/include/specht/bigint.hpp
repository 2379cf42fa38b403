#pragma once

#include <gmpxx.h>

#include <string>

namespace specht {

// All coefficient and character arithmetic is exact: arbitrary-precision
// integers throughout, rationals only where a centralizer order divides an
// integer (inner products, orthogonality checks).
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// Rationals print as "p/q", integers as plain decimals.
inline std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace specht
