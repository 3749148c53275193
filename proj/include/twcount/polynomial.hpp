#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "twcount/bigint.hpp"

namespace twc {

// Univariate polynomial with arbitrary-precision integer coefficients,
// stored low degree first. The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long c) : IntPolynomial(Int(c)) {}
  IntPolynomial(Int c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static IntPolynomial monomial(Int coeff, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of x^k; zero beyond the stored degree.
  const Int& coeff(std::size_t k) const;
  const std::vector<Int>& coefficients() const { return coeffs_; }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    a += b;
    return a;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    a -= b;
    return a;
  }
  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);
  IntPolynomial& operator*=(const IntPolynomial& o) {
    *this = *this * o;
    return *this;
  }

  bool operator==(const IntPolynomial&) const = default;

  Int evaluate(const Int& x) const;
  IntPolynomial derivative() const;

  std::string to_string() const;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

}  // namespace twc
