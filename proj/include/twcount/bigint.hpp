#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace twc {

// Arbitrary-precision signed integer used for all counts and weights.
using Int = mpz_class;

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline std::string to_decimal(const Int& x) { return x.get_str(); }

inline Int from_decimal(const std::string& s) { return Int(s); }

}  // namespace twc
