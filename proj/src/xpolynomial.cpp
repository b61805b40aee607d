#include "qbell/xpolynomial.hpp"

#include <ostream>
#include <utility>

namespace qbell {

XPolynomial::XPolynomial(std::vector<QPolynomial> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(QPolynomial());
  normalize();
}

XPolynomial XPolynomial::variable() { return monomial(1); }

XPolynomial XPolynomial::monomial(std::size_t k, const QPolynomial& c) {
  std::vector<QPolynomial> v(k + 1, QPolynomial());
  v[k] = c;
  return XPolynomial(std::move(v));
}

void XPolynomial::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const QPolynomial& XPolynomial::coeff(std::size_t i) const {
  static const QPolynomial zero;
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

QPolynomial XPolynomial::eval(const Rational& x0) const {
  QPolynomial acc = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    acc *= x0;
    acc += coeffs_[i];
  }
  return acc;
}

XPolynomial XPolynomial::shifted(const Rational& delta) const {
  // Horner in (X + delta).
  XPolynomial xd = variable();
  xd += XPolynomial(QPolynomial(delta));
  XPolynomial acc(coeffs_.back());
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    acc *= xd;
    acc += XPolynomial(coeffs_[i]);
  }
  return acc;
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), QPolynomial());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), QPolynomial());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

XPolynomial& XPolynomial::operator*=(const XPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.assign(1, QPolynomial());
    return *this;
  }
  std::vector<QPolynomial> out(coeffs_.size() + o.coeffs_.size() - 1, QPolynomial());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

XPolynomial& XPolynomial::operator*=(const QPolynomial& c) {
  for (auto& a : coeffs_) a *= c;
  normalize();
  return *this;
}

XPolynomial XPolynomial::operator-() const {
  XPolynomial r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }
XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
  XPolynomial r = a;
  r *= b;
  return r;
}
XPolynomial operator*(XPolynomial a, const QPolynomial& c) { return a *= c; }
XPolynomial operator*(const QPolynomial& c, XPolynomial a) { return a *= c; }

std::string XPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const QPolynomial& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += "(" + c.str() + ")";
    } else {
      if (!(c.is_constant() && c.coeff(0) == 1)) out += "(" + c.str() + ")";
      out += "X";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const XPolynomial& p) { return os << p.str(); }

}  // namespace qbell
