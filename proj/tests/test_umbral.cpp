#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "qbell/classical_bell.hpp"
#include "qbell/umbral.hpp"
#include "qbell/xpolynomial.hpp"
#include "test_helpers.hpp"

using namespace qbell;

TEST_CASE("falling_poly basics") {
  CHECK(falling_poly(0) == XPolynomial(QPolynomial(Rational(1))));
  CHECK(falling_poly(1) == XPolynomial::variable());
  // x(x-1) = x^2 - x
  CHECK(falling_poly(2) ==
        XPolynomial({QPolynomial(Rational(0)), QPolynomial(Rational(-1)), QPolynomial(Rational(1))}));
  // x(x-1)(x-2) = x^3 - 3x^2 + 2x
  CHECK(falling_poly(3) == XPolynomial({QPolynomial(Rational(0)), QPolynomial(Rational(2)),
                                        QPolynomial(Rational(-3)), QPolynomial(Rational(1))}));
}

TEST_CASE("falling_coeffs of x^n are Stirling numbers") {
  const StirlingTable table(10);
  for (unsigned n = 0; n <= 10; ++n) {
    XPolynomial xn = XPolynomial::monomial(n, QPolynomial(Rational(1)));
    const std::vector<QPolynomial> coeffs = falling_coeffs(xn);
    REQUIRE(coeffs.size() == n + 1);
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(coeffs[k] == QPolynomial(Rational(table.at(n, k))));
    }
  }
}

TEST_CASE("falling_coeffs reconstructs the input") {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const XPolynomial p = testing::random_xpoly(rng);
    const std::vector<QPolynomial> coeffs = falling_coeffs(p);
    XPolynomial rebuilt(QPolynomial(Rational(0)));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      XPolynomial term = falling_poly(k);
      term *= coeffs[k];
      rebuilt += term;
    }
    CHECK(rebuilt == p);
  }
}

TEST_CASE("parallel and serial basis conversion agree") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const XPolynomial p = testing::random_xpoly(rng, 14, 3, 7);
    CHECK(falling_coeffs(p) == falling_coeffs_serial(p));
  }
}

TEST_CASE("rota functional sends x^n to Bell numbers") {
  const UmbralFunctional rota = rota_functional();
  for (std::size_t n = 0; n <= 15; ++n) {
    const QPolynomial value = apply_functional(rota, XPolynomial::monomial(n, QPolynomial(Rational(1))));
    CHECK(value == QPolynomial(Rational(bell(n))));
  }
}

TEST_CASE("rota functional annihilates falling factorials above degree zero") {
  const UmbralFunctional rota = rota_functional();
  CHECK(apply_functional(rota, falling_poly(0)) == QPolynomial(Rational(1)));
  for (std::size_t k = 1; k <= 8; ++k) {
    CHECK(apply_functional(rota, falling_poly(k)) == QPolynomial(Rational(1)));
  }
}

TEST_CASE("poisson functional moments") {
  // lambda = 1 reproduces the Bell moment sequence.
  const UmbralFunctional p1 = poisson_functional(Rational(1));
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(apply_functional(p1, XPolynomial::monomial(n, QPolynomial(Rational(1)))) ==
          QPolynomial(Rational(bell(n))));
  }
  // General lambda: functional of the k-th falling factorial is lambda^k,
  // so the n-th moment is sum_k S(n,k) lambda^k (the Bell polynomial).
  const Rational lambda(3, 2);
  const UmbralFunctional p = poisson_functional(lambda);
  const StirlingTable table(10);
  for (unsigned n = 0; n <= 10; ++n) {
    Rational expected(0);
    for (unsigned k = 0; k <= n; ++k) {
      expected += Rational(table.at(n, k)) * rat_pow(lambda, k);
    }
    CHECK(apply_functional(p, XPolynomial::monomial(n, QPolynomial(Rational(1)))) ==
          QPolynomial(expected));
  }
  CHECK_THROWS_AS(poisson_functional(Rational(-1)), std::invalid_argument);
}

TEST_CASE("apply_functional is linear") {
  testing::Rng rng(31);
  const UmbralFunctional rota = rota_functional();
  for (int trial = 0; trial < 20; ++trial) {
    XPolynomial a = testing::random_xpoly(rng);
    XPolynomial b = testing::random_xpoly(rng);
    const Rational c = testing::random_rational(rng, 9, 5);
    XPolynomial combo = a;
    {
      XPolynomial scaled = b;
      scaled *= QPolynomial(c);
      combo += scaled;
    }
    QPolynomial lhs = apply_functional(rota, combo);
    QPolynomial rhs = apply_functional(rota, a);
    {
      QPolynomial t = apply_functional(rota, b);
      t *= c;
      rhs += t;
    }
    CHECK(lhs == rhs);
  }
}
