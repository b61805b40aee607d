#pragma once

#include <iosfwd>

#include "qbell/rational.hpp"

namespace qbell {

// Closed interval [lo, hi] with exact rational endpoints. All operations
// return enclosures of the exact image set; with rational endpoints that
// enclosure is itself exact, so no outward rounding is ever needed.
class RationalInterval {
 public:
  RationalInterval() : lo_(0), hi_(0) {}
  explicit RationalInterval(const Rational& point) : lo_(point), hi_(point) {}
  RationalInterval(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  Rational width() const { return hi_ - lo_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RationalInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  // max(|lo|, |hi|)
  Rational magnitude() const;

  friend bool operator==(const RationalInterval& a, const RationalInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_, hi_;
};

RationalInterval interval_add(const RationalInterval& a, const RationalInterval& b);

// Smallest interval containing {x*y : x in a, y in b}.
RationalInterval interval_mul(const RationalInterval& a, const RationalInterval& b);

// Bracket of e^{-1} from consecutive alternating partial sums of
// sum_k (-1)^k/k!: [min(s_K, s_{K+1}), max(s_K, s_{K+1})]. The true value
// lies strictly inside; the width is 1/(K+1)!. Requires K >= 1.
RationalInterval e_inverse_bracket(unsigned long K);

std::ostream& operator<<(std::ostream& os, const RationalInterval& iv);

}  // namespace qbell
