#include "qbell/rational.hpp"

#include <stdexcept>
#include <vector>

namespace qbell {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

const Integer& factorial(unsigned long n) {
  thread_local std::vector<Integer> table{Integer(1)};
  while (table.size() <= n) {
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  }
  return table[n];
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer int_pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational rat_pow(const Rational& base, unsigned long exp) {
  // Powers of a canonical fraction stay canonical.
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), exp);
  return r;
}

Rational rat_abs(const Rational& x) {
  Rational r;
  mpq_abs(r.get_mpq_t(), x.get_mpq_t());
  return r;
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

Integer rat_floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Integer rat_ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  }
}

std::string fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string plain_string(const Rational& x) { return x.get_str(); }

}  // namespace qbell
