#pragma once

#include <iosfwd>
#include <vector>

#include "qbell/rational.hpp"

namespace qbell {

// Truncated formal power series a_0 + a_1 x + ... + a_N x^N + O(x^{N+1})
// with exact rational coefficients. Exactly N+1 coefficients are stored;
// binary operations truncate to the smaller operand order.
class PowerSeries {
 public:
  explicit PowerSeries(unsigned order) : coeffs_(order + 1, Rational(0)) {}
  PowerSeries(unsigned order, std::vector<Rational> coeffs);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const Rational& coeff(unsigned i) const { return coeffs_.at(i); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  PowerSeries truncated(unsigned new_order) const;

  // Formal derivative, order N-1. Requires order >= 1.
  PowerSeries derivative() const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries operator+(PowerSeries a, const PowerSeries& b);
PowerSeries operator-(PowerSeries a, const PowerSeries& b);

// Truncated Cauchy product to the common (smaller) order.
PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g);

// exp(f) for f with zero constant term, via g_0 = 1 and
// g_m = (1/m) sum_{i=1}^{m} i f_i g_{m-i}.
PowerSeries series_exp(const PowerSeries& f);

// sum_{i<=N} x^i / i!
PowerSeries exponential_series(unsigned N);

// exp(e^x - 1) to order N; n! * a_n is the n-th Bell number.
PowerSeries bell_egf(unsigned N);

// (0!*a_0, ..., N!*a_N) from bell_egf(N). Every entry is checked to be an
// exact integer; a violation throws std::logic_error (implementation bug).
std::vector<Integer> egf_extract_bell(unsigned N);

std::ostream& operator<<(std::ostream& os, const PowerSeries& s);

}  // namespace qbell
