#include <doctest.h>

#include <stdexcept>

#include "qbell/classical_bell.hpp"
#include "qbell/power_series.hpp"
#include "test_helpers.hpp"

using namespace qbell;

TEST_CASE("constructor pads and validates") {
  const PowerSeries s(4, {Rational(1), Rational(2)});
  REQUIRE(s.order() == 4);
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(1) == 2);
  CHECK(s.coeff(4) == 0);
  CHECK_THROWS_AS(PowerSeries(1, {Rational(1), Rational(2), Rational(3)}), std::invalid_argument);
}

TEST_CASE("multiplication truncates correctly") {
  // (1+x)(1-x) = 1 - x^2 at order 3.
  const PowerSeries a(3, {Rational(1), Rational(1)});
  const PowerSeries b(3, {Rational(1), Rational(-1)});
  const PowerSeries prod = series_mul(a, b);
  CHECK(prod.coeff(0) == 1);
  CHECK(prod.coeff(1) == 0);
  CHECK(prod.coeff(2) == -1);
  CHECK(prod.coeff(3) == 0);
  // Mixed orders truncate to the smaller one.
  const PowerSeries c(5, {Rational(1), Rational(1)});
  CHECK(series_mul(a, c).order() == 3);
}

TEST_CASE("exp of x matches the exponential series") {
  const PowerSeries x(10, {Rational(0), Rational(1)});
  CHECK(series_exp(x) == exponential_series(10));
  for (std::size_t m = 0; m <= 10; ++m) {
    CHECK(exponential_series(10).coeff(m) == make_rational(1, factorial(m)));
  }
}

TEST_CASE("exp rejects nonzero constant term") {
  const PowerSeries bad(3, {Rational(1), Rational(1)});
  CHECK_THROWS_AS(series_exp(bad), std::invalid_argument);
}

TEST_CASE("exp of x + x^2/2 hand-checked prefix") {
  const PowerSeries f(3, {Rational(0), Rational(1), Rational(1, 2)});
  const PowerSeries g = series_exp(f);
  CHECK(g.coeff(0) == 1);
  CHECK(g.coeff(1) == 1);
  CHECK(g.coeff(2) == 1);
  CHECK(g.coeff(3) == Rational(2, 3));
}

TEST_CASE("exp agrees with composition oracle on random inputs") {
  testing::Rng rng(512);
  for (int trial = 0; trial < 25; ++trial) {
    const PowerSeries f = testing::random_zero_constant_series(rng, 9, 7);
    CHECK(series_exp(f) == testing::exp_by_composition(f));
  }
}

TEST_CASE("exp turns sums into products") {
  testing::Rng rng(513);
  for (int trial = 0; trial < 15; ++trial) {
    const PowerSeries f = testing::random_zero_constant_series(rng, 8, 6);
    const PowerSeries g = testing::random_zero_constant_series(rng, 8, 6);
    PowerSeries sum = f;
    sum += g;
    CHECK(series_exp(sum) == series_mul(series_exp(f), series_exp(g)));
  }
}

TEST_CASE("derivative of exp(f) is f' exp(f)") {
  testing::Rng rng(514);
  for (int trial = 0; trial < 15; ++trial) {
    const PowerSeries f = testing::random_zero_constant_series(rng, 9, 6);
    const PowerSeries ef = series_exp(f);
    CHECK(ef.derivative() == series_mul(f.derivative(), ef.truncated(8)));
  }
}

TEST_CASE("Bell EGF coefficients") {
  const PowerSeries egf = bell_egf(25);
  const std::vector<Integer> bells = bell_sequence(25);
  for (unsigned n = 0; n <= 25; ++n) {
    CHECK(egf.coeff(n) == make_rational(bells[n], factorial(n)));
    CHECK(is_integral(Rational(factorial(n)) * egf.coeff(n)));
  }
}

TEST_CASE("extracted EGF sequence matches the triangle recurrence") {
  const std::vector<Integer> from_egf = egf_extract_bell(30);
  const std::vector<Integer> from_triangle = bell_sequence(30);
  REQUIRE(from_egf.size() == 31);
  CHECK(from_egf == from_triangle);
}
