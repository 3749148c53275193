#include "twcount/polynomial.hpp"

#include <sstream>

namespace twc {

IntPolynomial IntPolynomial::monomial(Int coeff, std::size_t degree) {
  if (coeff == 0) return {};
  std::vector<Int> c(degree + 1);
  c[degree] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

const Int& IntPolynomial::coeff(std::size_t k) const {
  static const Int kZero = 0;
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

Int IntPolynomial::evaluate(const Int& x) const {
  Int r = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
  return r;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Int> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    c[i - 1] = coeffs_[i] * static_cast<long>(i);
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ", ";
    out << coeffs_[i].get_str();
  }
  out << "]";
  return out.str();
}

}  // namespace twc
