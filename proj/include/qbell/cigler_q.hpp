#pragma once

#include <vector>

#include "qbell/umbral.hpp"

namespace qbell {

// X(X-1+q)(X-1+q^2)...(X-1+q^{n-1}), expanded. Monic of degree n in X;
// the empty product (n = 0) is 1.
XPolynomial xq_product(unsigned n);

// One row of Cigler's q-Stirling triangle, entries for k = 0..n.
struct QStirlingRow {
  unsigned n = 0;
  std::vector<QPolynomial> entries;

  const QPolynomial& at(unsigned k) const { return entries.at(k); }
};

// Row n by the recurrence {n+1,k} = {n,k-1} + (k-1+q^n)*{n,k}, {0,0} = 1.
// The recurrence is certified against qstirling_oracle by the test suite
// before anything else relies on it.
QStirlingRow qstirling_row(unsigned n);

// {n k}_q; zero when k > n.
QPolynomial cigler_qstirling(unsigned n, unsigned k);

// Ground truth for {n k}_q: the falling-factorial coefficients of
// xq_product(n), independent of any recurrence. Rejects n > 16
// (coefficient degrees grow like n^2/2).
QStirlingRow qstirling_oracle(unsigned n);

// B_n(q) = sum_k {n k}_q. Nonnegative integer coefficients; B_n(1) = B_n.
QPolynomial qbell_poly(unsigned n);

struct IdentityCase {
  unsigned n = 0;
  bool pass = false;
};

struct IdentityReport {
  std::vector<IdentityCase> cases;
  bool all_pass() const;
};

// Checks xq_product(n) == sum_k {n k}_q * falling_poly(k) as exact
// XPolynomial equality for every n <= n_max (n_max <= 16). Failures are
// reported, not thrown.
IdentityReport verify_cigler_identity(unsigned n_max);

}  // namespace qbell
