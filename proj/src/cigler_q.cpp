#include "qbell/cigler_q.hpp"

#include <stdexcept>
#include <utility>

namespace qbell {

namespace {
constexpr unsigned kOracleMaxN = 16;
}

XPolynomial xq_product(unsigned n) {
  XPolynomial acc(QPolynomial(1));
  if (n == 0) return acc;
  acc = XPolynomial::variable();
  for (unsigned i = 1; i < n; ++i) {
    // acc *= (X + (q^i - 1))
    XPolynomial factor = XPolynomial::variable();
    QPolynomial shift = QPolynomial::monomial(i);
    shift -= QPolynomial(1);
    factor += XPolynomial(shift);
    acc *= factor;
  }
  return acc;
}

QStirlingRow qstirling_row(unsigned n) {
  std::vector<QPolynomial> row{QPolynomial(1)};
  for (unsigned m = 0; m < n; ++m) {
    // row holds {m,0..m}; produce {m+1,0..m+1}.
    std::vector<QPolynomial> next(m + 2, QPolynomial());
    const QPolynomial qm = QPolynomial::monomial(m);
    for (unsigned k = 0; k <= m + 1; ++k) {
      if (k >= 1) next[k] += row[k - 1];
      if (k <= m) {
        QPolynomial weight = qm;
        weight += QPolynomial(Rational(static_cast<long>(k)) - 1);
        next[k] += weight * row[k];
      }
    }
    row = std::move(next);
  }
  return QStirlingRow{n, std::move(row)};
}

QPolynomial cigler_qstirling(unsigned n, unsigned k) {
  if (k > n) return QPolynomial();
  return qstirling_row(n).entries[k];
}

QStirlingRow qstirling_oracle(unsigned n) {
  if (n > kOracleMaxN) {
    throw std::invalid_argument("qstirling_oracle: n > 16 (cost guard)");
  }
  std::vector<QPolynomial> entries = falling_coeffs(xq_product(n));
  entries.resize(n + 1, QPolynomial());
  return QStirlingRow{n, std::move(entries)};
}

QPolynomial qbell_poly(unsigned n) {
  QPolynomial acc;
  for (const auto& e : qstirling_row(n).entries) acc += e;
  return acc;
}

bool IdentityReport::all_pass() const {
  for (const auto& c : cases) {
    if (!c.pass) return false;
  }
  return true;
}

IdentityReport verify_cigler_identity(unsigned n_max) {
  if (n_max > kOracleMaxN) {
    throw std::invalid_argument("verify_cigler_identity: n_max > 16 (cost guard)");
  }
  IdentityReport report;
  report.cases.resize(n_max + 1);
  const long long top = static_cast<long long>(n_max);
#pragma omp parallel for schedule(dynamic) if (top >= 4)
  for (long long n = 0; n <= top; ++n) {
    const QStirlingRow row = qstirling_row(static_cast<unsigned>(n));
    XPolynomial rhs;
    for (unsigned k = 0; k <= static_cast<unsigned>(n); ++k) {
      if (row.entries[k].is_zero()) continue;
      rhs += row.entries[k] * falling_poly(k);
    }
    report.cases[n] = IdentityCase{static_cast<unsigned>(n),
                                   rhs == xq_product(static_cast<unsigned>(n))};
  }
  return report;
}

}  // namespace qbell
