#include "qbell/power_series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace qbell {

PowerSeries::PowerSeries(unsigned order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("PowerSeries: more coefficients than order + 1");
  }
  coeffs_.resize(order + 1, Rational(0));
}

PowerSeries PowerSeries::truncated(unsigned new_order) const {
  if (new_order > order()) {
    throw std::invalid_argument("PowerSeries::truncated: cannot extend the order");
  }
  return PowerSeries(new_order,
                     std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

PowerSeries PowerSeries::derivative() const {
  if (order() == 0) {
    throw std::invalid_argument("PowerSeries::derivative: order 0 has no truncation room");
  }
  std::vector<Rational> out(order());
  for (unsigned i = 1; i <= order(); ++i) {
    out[i - 1] = coeffs_[i] * Rational(i);
  }
  return PowerSeries(order() - 1, std::move(out));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  const unsigned n = std::min(order(), o.order());
  coeffs_.resize(n + 1);
  for (unsigned i = 0; i <= n; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  const unsigned n = std::min(order(), o.order());
  coeffs_.resize(n + 1);
  for (unsigned i = 0; i <= n; ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g) {
  const unsigned n = std::min(f.order(), g.order());
  PowerSeries out(n);
  std::vector<Rational> c(n + 1, Rational(0));
  for (unsigned i = 0; i <= n; ++i) {
    if (f.coeff(i) == 0) continue;
    for (unsigned j = 0; i + j <= n; ++j) {
      c[i + j] += f.coeff(i) * g.coeff(j);
    }
  }
  return PowerSeries(n, std::move(c));
}

PowerSeries series_exp(const PowerSeries& f) {
  if (f.coeff(0) != 0) {
    throw std::invalid_argument("series_exp: constant term must be zero");
  }
  const unsigned n = f.order();
  std::vector<Rational> g(n + 1, Rational(0));
  g[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc(0);
    for (unsigned i = 1; i <= m; ++i) {
      acc += Rational(i) * f.coeff(i) * g[m - i];
    }
    g[m] = acc / Rational(m);
  }
  return PowerSeries(n, std::move(g));
}

PowerSeries exponential_series(unsigned N) {
  std::vector<Rational> c(N + 1);
  for (unsigned i = 0; i <= N; ++i) c[i] = make_rational(1, factorial(i));
  return PowerSeries(N, std::move(c));
}

PowerSeries bell_egf(unsigned N) {
  PowerSeries arg = exponential_series(N);
  arg -= PowerSeries(N, {Rational(1)});
  return series_exp(arg);
}

std::vector<Integer> egf_extract_bell(unsigned N) {
  const PowerSeries f = bell_egf(N);
  std::vector<Integer> out;
  out.reserve(N + 1);
  for (unsigned i = 0; i <= N; ++i) {
    const Rational v = f.coeff(i) * Rational(factorial(i));
    if (!is_integral(v)) {
      throw std::logic_error("egf_extract_bell: n! * a_n is not an integer");
    }
    out.push_back(v.get_num());
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& s) {
  os << "[";
  for (unsigned i = 0; i <= s.order(); ++i) {
    if (i) os << ", ";
    os << s.coeff(i);
  }
  return os << "] + O(x^" << s.order() + 1 << ")";
}

}  // namespace qbell
