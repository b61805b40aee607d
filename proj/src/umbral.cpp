#include "qbell/umbral.hpp"

#include <stdexcept>
#include <utility>

namespace qbell {

XPolynomial falling_poly(std::size_t k) {
  XPolynomial acc(QPolynomial(1));
  for (std::size_t i = 0; i < k; ++i) {
    // acc *= (X - i)
    XPolynomial factor = XPolynomial::variable();
    factor -= XPolynomial(QPolynomial(Rational(static_cast<long>(i))));
    acc *= factor;
  }
  return acc;
}

std::vector<QPolynomial> falling_coeffs_serial(const XPolynomial& p) {
  const std::size_t d = p.degree();
  std::vector<QPolynomial> vals(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    vals[j] = p.eval(Rational(static_cast<unsigned long>(j)));
  }
  // In-place forward differences: after sweep k, vals[k] = Delta^k p(0).
  for (std::size_t k = 1; k <= d; ++k) {
    for (std::size_t i = d; i >= k; --i) {
      vals[i] -= vals[i - 1];
    }
  }
  for (std::size_t k = 2; k <= d; ++k) {
    vals[k] /= Rational(factorial(k));
  }
  return vals;
}

std::vector<QPolynomial> falling_coeffs(const XPolynomial& p) {
  const std::size_t d = p.degree();
  const long long dd = static_cast<long long>(d);
  std::vector<QPolynomial> cur(d + 1);
#pragma omp parallel for schedule(static) if (dd >= 8)
  for (long long j = 0; j <= dd; ++j) {
    cur[j] = p.eval(Rational(static_cast<unsigned long>(j)));
  }
  std::vector<QPolynomial> out(d + 1);
  out[0] = cur[0];
  std::vector<QPolynomial> next;
  for (std::size_t k = 1; k <= d; ++k) {
    const long long len = static_cast<long long>(d - k);
    next.assign(d + 1 - k, QPolynomial());
#pragma omp parallel for schedule(static) if (len >= 8)
    for (long long i = 0; i <= len; ++i) {
      next[i] = cur[i + 1] - cur[i];
    }
    cur.swap(next);
    out[k] = cur[0] / Rational(factorial(k));
  }
  return out;
}

UmbralFunctional rota_functional() {
  return UmbralFunctional([](std::size_t) { return QPolynomial(1); });
}

UmbralFunctional poisson_functional(const Rational& lambda) {
  if (lambda < 0) {
    throw std::invalid_argument("poisson_functional: lambda must be >= 0");
  }
  return UmbralFunctional(
      [lambda](std::size_t k) { return QPolynomial(rat_pow(lambda, k)); });
}

QPolynomial apply_functional(const UmbralFunctional& L, const XPolynomial& p) {
  const std::vector<QPolynomial> c = falling_coeffs(p);
  QPolynomial acc;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    acc += c[k] * L.moment(k);
  }
  return acc;
}

}  // namespace qbell
