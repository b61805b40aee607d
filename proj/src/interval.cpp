#include "qbell/interval.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace qbell {

RationalInterval::RationalInterval(const Rational& lo, const Rational& hi)
    : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw std::invalid_argument("RationalInterval: lo > hi");
}

Rational RationalInterval::magnitude() const {
  return std::max(rat_abs(lo_), rat_abs(hi_));
}

RationalInterval interval_add(const RationalInterval& a, const RationalInterval& b) {
  return RationalInterval(a.lo() + b.lo(), a.hi() + b.hi());
}

RationalInterval interval_mul(const RationalInterval& a, const RationalInterval& b) {
  const Rational p1 = a.lo() * b.lo();
  const Rational p2 = a.lo() * b.hi();
  const Rational p3 = a.hi() * b.lo();
  const Rational p4 = a.hi() * b.hi();
  return RationalInterval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

RationalInterval e_inverse_bracket(unsigned long K) {
  if (K < 1) throw std::invalid_argument("e_inverse_bracket: K must be >= 1");
  Rational s(0);
  for (unsigned long k = 0; k <= K; ++k) {
    const Rational term = make_rational(1, factorial(k));
    if (k % 2 == 0) {
      s += term;
    } else {
      s -= term;
    }
  }
  Rational s_next = s;
  const Rational last = make_rational(1, factorial(K + 1));
  if ((K + 1) % 2 == 0) {
    s_next += last;
  } else {
    s_next -= last;
  }
  return RationalInterval(std::min(s, s_next), std::max(s, s_next));
}

std::ostream& operator<<(std::ostream& os, const RationalInterval& iv) {
  return os << "[" << iv.lo() << ", " << iv.hi() << "]";
}

}  // namespace qbell
