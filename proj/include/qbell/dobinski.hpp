#pragma once

#include <cstdint>
#include <optional>

#include "qbell/interval.hpp"
#include "qbell/qpolynomial.hpp"

namespace qbell {

// X_q^n evaluated at X = j: j * (j-1+q0) * (j-1+q0^2) * ... * (j-1+q0^{n-1}).
// 1 when n = 0; 0 when n >= 1 and j = 0.
Rational term_value(unsigned n, const Rational& q0, unsigned long j);

// Proven bound on sum_{j>J} |term_value(n,q0,j)| / j!, from the dominating
// sequence a_j = (j+M)^n / j! with M = max(1, |q0|^{n-1}). The ratio
// a_{j+1}/a_j is decreasing, so a single check a_{J+1}/a_J <= 1/2 at j = J
// certifies the geometric bound 2*a_{J+1}. Returns nullopt when the ratio
// check fails (the caller should enlarge J). Requires J >= 1.
std::optional<Rational> tail_bound(unsigned n, const Rational& q0, unsigned long J);

// Exact partial sum sum_{j=0}^{J} term_value(n,q0,j) / j!. The default
// entry point reduces per-thread partial sums; the serial reference walks
// the terms in order with a running factorial. Exact arithmetic makes the
// two agree bit-for-bit.
Rational poisson_series_sum(unsigned n, const Rational& q0, unsigned long J);
Rational poisson_series_sum_serial(unsigned n, const Rational& q0, unsigned long J);

struct DobinskiResult {
  unsigned n = 0;
  std::optional<Rational> q0;          // empty for the classical series
  unsigned long truncation = 0;        // J
  unsigned long bracket_index = 0;     // K of the e^{-1} bracket
  RationalInterval enclosure;
  // Classical: the unique integer in the enclosure. q case: the exact
  // rational B_n(q0), recorded iff the enclosure contains it.
  std::optional<Rational> certified;
};

// Certified evaluation of e^{-1} sum_j j^n/j!: grows J (doubling) and the
// bracket index K until the enclosure width is below the target (default
// 1/2, narrow enough to pin a unique integer, which equals B_n).
DobinskiResult dobinski_bell(unsigned n, const Rational& width_target = Rational(1, 2));

// Same scheme for the q-deformed series e^{-1} sum_j term_value(n,q0,j)/j!,
// checked against the independently computed exact value B_n(q0).
DobinskiResult dobinski_qbell(unsigned n, const Rational& q0,
                              const Rational& width_target = Rational(1, 1000000));

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  Rational exact_mean;     // the sample mean before conversion to double
};

// Seeded Monte Carlo average of term_value(n, q0, J) over J ~ Poisson(1).
// Sample values are accumulated exactly, so the estimate is bit-identical
// for a fixed (n, q0, samples, seed) regardless of thread count. Rejects
// samples < 1000. The default entry point bins draws per outcome across
// threads; the serial reference accumulates sample by sample.
McEstimate poisson_mc(unsigned n, const Rational& q0, std::uint64_t samples,
                      std::uint64_t seed);
McEstimate poisson_mc_serial(unsigned n, const Rational& q0, std::uint64_t samples,
                             std::uint64_t seed);

// |mean - target| / std_error; 0 when std_error = 0 and the exact mean hits
// the target, +inf when it misses with zero spread.
double mc_z_score(const McEstimate& est, const Rational& target);

}  // namespace qbell
