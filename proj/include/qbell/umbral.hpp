#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qbell/xpolynomial.hpp"

namespace qbell {

// k-th falling factorial X(X-1)...(X-k+1), expanded into monomial form.
// Degree exactly k, monic; the empty product (k = 0) is 1.
XPolynomial falling_poly(std::size_t k);

// Coefficients c_0..c_d with p = sum_k c_k * falling_poly(k), obtained by
// exact forward differences at the nodes 0..d: c_k = Delta^k p(0) / k!.
// The default entry point parallelizes the node evaluations and the
// difference sweeps; falling_coeffs_serial is the reference implementation
// (classic in-place difference table) kept for testing, and both agree
// exactly on every input.
std::vector<QPolynomial> falling_coeffs(const XPolynomial& p);
std::vector<QPolynomial> falling_coeffs_serial(const XPolynomial& p);

// Linear functional on Q[q][X] defined by its values m_k on the falling
// factorial basis. Moments are produced lazily by index, so a functional
// works for polynomials of any degree.
class UmbralFunctional {
 public:
  explicit UmbralFunctional(std::function<QPolynomial(std::size_t)> moments)
      : moments_(std::move(moments)) {}

  // L applied to falling_poly(k).
  QPolynomial moment(std::size_t k) const { return moments_(k); }

 private:
  std::function<QPolynomial(std::size_t)> moments_;
};

// Rota's functional: m_k = 1 for every k.
UmbralFunctional rota_functional();

// Factorial moments of Poisson(lambda): m_k = lambda^k. Coincides with
// rota_functional at lambda = 1. Rejects lambda < 0.
UmbralFunctional poisson_functional(const Rational& lambda);

// sum_k falling_coeffs(p)_k * m_k. Linear in p.
QPolynomial apply_functional(const UmbralFunctional& L, const XPolynomial& p);

}  // namespace qbell
