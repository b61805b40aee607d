#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qbell/rational.hpp"

namespace qbell {

// Dense polynomial in the indeterminate q over Rational. Canonical form:
// the trailing coefficient is nonzero, except for the zero polynomial which
// is stored as the single coefficient 0.
class QPolynomial {
 public:
  QPolynomial() : coeffs_{Rational(0)} {}
  QPolynomial(const Rational& c) : coeffs_{c} {}
  QPolynomial(const Integer& c) : coeffs_{Rational(c)} {}
  QPolynomial(long c) : coeffs_{Rational(c)} {}
  explicit QPolynomial(std::vector<Rational> coeffs);

  // The indeterminate q itself.
  static QPolynomial variable();
  // c * q^k
  static QPolynomial monomial(std::size_t k, const Rational& c = Rational(1));

  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  bool is_constant() const { return coeffs_.size() == 1; }

  // Zero beyond the stored degree.
  const Rational& coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Exact Horner evaluation.
  Rational eval(const Rational& q0) const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  QPolynomial& operator*=(const Rational& c);
  QPolynomial& operator/=(const Rational& c);
  QPolynomial operator-() const;

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const QPolynomial& a, const QPolynomial& b) {
    return !(a == b);
  }

  // Human-readable form, e.g. "2 + q + 3q^2".
  std::string str() const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

QPolynomial operator+(QPolynomial a, const QPolynomial& b);
QPolynomial operator-(QPolynomial a, const QPolynomial& b);
QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
QPolynomial operator*(QPolynomial a, const Rational& c);
QPolynomial operator*(const Rational& c, QPolynomial a);
QPolynomial operator/(QPolynomial a, const Rational& c);

std::ostream& operator<<(std::ostream& os, const QPolynomial& p);

}  // namespace qbell
