#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qbell/qpolynomial.hpp"

namespace qbell {

// Polynomial in the umbral variable X whose coefficients live in Q[q].
// Same canonical form as QPolynomial: nonzero leading coefficient except
// for the zero polynomial.
class XPolynomial {
 public:
  XPolynomial() : coeffs_{QPolynomial()} {}
  XPolynomial(const QPolynomial& c) : coeffs_{c} {}
  explicit XPolynomial(std::vector<QPolynomial> coeffs);

  // The umbral variable X itself.
  static XPolynomial variable();
  // c * X^k
  static XPolynomial monomial(std::size_t k, const QPolynomial& c = QPolynomial(1));

  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
  const QPolynomial& coeff(std::size_t i) const;
  const std::vector<QPolynomial>& coeffs() const { return coeffs_; }

  // Substitute X = x0; the result stays a polynomial in q.
  QPolynomial eval(const Rational& x0) const;

  // p(X + delta), by Horner composition.
  XPolynomial shifted(const Rational& delta) const;

  XPolynomial& operator+=(const XPolynomial& o);
  XPolynomial& operator-=(const XPolynomial& o);
  XPolynomial& operator*=(const XPolynomial& o);
  XPolynomial& operator*=(const QPolynomial& c);
  XPolynomial operator-() const;

  friend bool operator==(const XPolynomial& a, const XPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const XPolynomial& a, const XPolynomial& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  void normalize();

  std::vector<QPolynomial> coeffs_;
};

XPolynomial operator+(XPolynomial a, const XPolynomial& b);
XPolynomial operator-(XPolynomial a, const XPolynomial& b);
XPolynomial operator*(const XPolynomial& a, const XPolynomial& b);
XPolynomial operator*(XPolynomial a, const QPolynomial& c);
XPolynomial operator*(const QPolynomial& c, XPolynomial a);

std::ostream& operator<<(std::ostream& os, const XPolynomial& p);

}  // namespace qbell
