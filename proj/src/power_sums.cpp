#include "twcount/power_sums.hpp"

#include <algorithm>

#include "twcount/errors.hpp"

namespace twc {

// With chi(x) = x^n + c_{n-1} x^{n-1} + ... + c_0, the elementary symmetric
// polynomials of its roots are e_i = (-1)^i c_{n-i} (zero past n), and
// Newton's identity gives, for every k >= 1,
//   p_k = (-1)^{k-1} k e_k + sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i}.
// For k > n the leading term vanishes, leaving the pure recurrence.
std::vector<Int> power_sums_from_charpoly(const IntPolynomial& chi,
                                          std::size_t max_power) {
  const int deg = chi.degree();
  if (deg < 0 || chi.coeff(static_cast<std::size_t>(deg)) != 1)
    fail(errc::not_monic,
         "expected a monic polynomial, got " + chi.to_string());
  const std::size_t n = static_cast<std::size_t>(deg);

  std::vector<Int> e(max_power + 1, Int(0));
  e[0] = 1;
  for (std::size_t i = 1; i <= std::min(max_power, n); ++i) {
    e[i] = chi.coeff(n - i);
    if (i % 2 == 1) e[i] = -e[i];
  }

  std::vector<Int> p(max_power + 1, Int(0));
  p[0] = static_cast<long>(n);
  for (std::size_t k = 1; k <= max_power; ++k) {
    Int acc = e[k] * static_cast<long>(k);
    if (k % 2 == 0) acc = -acc;
    for (std::size_t i = 1; i < k; ++i) {
      if (i % 2 == 1)
        acc += e[i] * p[k - i];
      else
        acc -= e[i] * p[k - i];
    }
    p[k] = acc;
  }
  return p;
}

Int trace_power(const SquareIntMatrix& m, const NiceTreeDecomposition& nt,
                std::size_t k, int width_limit) {
  if (k == 0) fail(errc::invalid_argument, "power must be at least 1");
  const IntPolynomial chi = characteristic_polynomial(m, nt, width_limit);
  return power_sums_from_charpoly(chi, k)[k];
}

Int trace_power(const SquareIntMatrix& m, std::size_t k, int width_limit) {
  if (k == 0) fail(errc::invalid_argument, "power must be at least 1");
  const IntPolynomial chi = characteristic_polynomial(m, width_limit);
  return power_sums_from_charpoly(chi, k)[k];
}

}  // namespace twc
