#include "qbell/qpolynomial.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace qbell {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(Rational(0));
  normalize();
}

QPolynomial QPolynomial::variable() { return monomial(1); }

QPolynomial QPolynomial::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& QPolynomial::coeff(std::size_t i) const {
  static const Rational zero(0);
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

Rational QPolynomial::eval(const Rational& q0) const {
  Rational acc = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    acc *= q0;
    acc += coeffs_[i];
  }
  return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.assign(1, Rational(0));
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator/=(const Rational& c) {
  if (c == 0) throw std::invalid_argument("QPolynomial: division by zero");
  for (auto& a : coeffs_) a /= c;
  return *this;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial r = a;
  r *= b;
  return r;
}
QPolynomial operator*(QPolynomial a, const Rational& c) { return a *= c; }
QPolynomial operator*(const Rational& c, QPolynomial a) { return a *= c; }
QPolynomial operator/(QPolynomial a, const Rational& c) { return a /= c; }

std::string QPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational a = c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) a = -a;
    const bool unit = (a == 1);
    if (i == 0) {
      out += plain_string(a);
    } else {
      if (!unit) out += plain_string(a);
      out += "q";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.str(); }

}  // namespace qbell
