#include "qbell/dobinski.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qbell/cigler_q.hpp"

namespace qbell {

Rational term_value(unsigned n, const Rational& q0, unsigned long j) {
  if (n == 0) return Rational(1);
  if (j == 0) return Rational(0);
  Rational acc(j);
  Rational qpow(1);
  const Rational jm1(j - 1);
  for (unsigned i = 1; i < n; ++i) {
    qpow *= q0;
    acc *= jm1 + qpow;
  }
  return acc;
}

std::optional<Rational> tail_bound(unsigned n, const Rational& q0, unsigned long J) {
  if (J < 1) throw std::invalid_argument("tail_bound: J must be >= 1");
  const Rational M =
      std::max(Rational(1), rat_pow(rat_abs(q0), n >= 1 ? n - 1 : 0));
  // a_{J+1}/a_J <= 1/2  <=>  2*(J+1+M)^n <= (J+1)*(J+M)^n
  const Rational lhs = Rational(2) * rat_pow(Rational(J + 1) + M, n);
  const Rational rhs = Rational(J + 1) * rat_pow(Rational(J) + M, n);
  if (lhs > rhs) return std::nullopt;
  return Rational(2) * rat_pow(Rational(J + 1) + M, n) / Rational(factorial(J + 1));
}

Rational poisson_series_sum_serial(unsigned n, const Rational& q0, unsigned long J) {
  Rational sum(0);
  Integer fact(1);
  for (unsigned long j = 0; j <= J; ++j) {
    if (j > 0) fact *= j;
    sum += term_value(n, q0, j) / Rational(fact);
  }
  return sum;
}

Rational poisson_series_sum(unsigned n, const Rational& q0, unsigned long J) {
  std::vector<Integer> fact(J + 1);
  fact[0] = 1;
  for (unsigned long j = 1; j <= J; ++j) fact[j] = fact[j - 1] * j;
  Rational total(0);
  const long long top = static_cast<long long>(J);
#pragma omp parallel if (top >= 32)
  {
    Rational local(0);
#pragma omp for schedule(static) nowait
    for (long long j = 0; j <= top; ++j) {
      local += term_value(n, q0, static_cast<unsigned long>(j)) / Rational(fact[j]);
    }
#pragma omp critical
    total += local;
  }
  return total;
}

namespace {

struct EnclosureParts {
  unsigned long J = 0;
  unsigned long K = 0;
  RationalInterval enclosure;
};

// J doubles until the ratio test certifies the tail and the enclosure is
// narrow enough; K grows until the e^{-1} bracket contributes less than
// half the allowed width.
EnclosureParts enclose_poisson_average(unsigned n, const Rational& q0,
                                       const Rational& width_target) {
  if (width_target <= 0) {
    throw std::invalid_argument("width target must be positive");
  }
  unsigned long J = 2UL * n + 2;
  unsigned long K = 10;
  for (;;) {
    const auto tail = tail_bound(n, q0, J);
    if (!tail) {
      J *= 2;
      continue;
    }
    const Rational sum = poisson_series_sum(n, q0, J);
    const RationalInterval series_part =
        q0 >= 0 ? RationalInterval(sum, sum + *tail)
                : RationalInterval(sum - *tail, sum + *tail);
    const Rational mag = series_part.magnitude();
    RationalInterval bracket = e_inverse_bracket(K);
    while (bracket.width() * mag * Rational(2) > width_target) {
      bracket = e_inverse_bracket(++K);
    }
    const RationalInterval enclosure = interval_mul(bracket, series_part);
    if (enclosure.width() < width_target) return {J, K, enclosure};
    J *= 2;
  }
}

}  // namespace

DobinskiResult dobinski_bell(unsigned n, const Rational& width_target) {
  const EnclosureParts parts = enclose_poisson_average(n, Rational(1), width_target);
  DobinskiResult result;
  result.n = n;
  result.truncation = parts.J;
  result.bracket_index = parts.K;
  result.enclosure = parts.enclosure;
  const Integer lo = rat_ceil(parts.enclosure.lo());
  const Integer hi = rat_floor(parts.enclosure.hi());
  if (lo == hi) result.certified = Rational(lo);
  return result;
}

DobinskiResult dobinski_qbell(unsigned n, const Rational& q0,
                              const Rational& width_target) {
  const EnclosureParts parts = enclose_poisson_average(n, q0, width_target);
  DobinskiResult result;
  result.n = n;
  result.q0 = q0;
  result.truncation = parts.J;
  result.bracket_index = parts.K;
  result.enclosure = parts.enclosure;
  const Rational exact = qbell_poly(n).eval(q0);
  if (parts.enclosure.contains(exact)) result.certified = exact;
  return result;
}

namespace {

constexpr unsigned kPoissonDrawCap = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform in [0,1) from the i-th element of the splitmix64 stream.
double uniform01(std::uint64_t seed, std::uint64_t i) {
  const std::uint64_t bits = splitmix64(seed + i * 0x9E3779B97F4A7C15ULL);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// CDF of Poisson(1) in double precision; saturates to 1.0 well before the
// cap, so every uniform draw maps to some j <= kPoissonDrawCap.
const std::array<double, kPoissonDrawCap + 1>& poisson1_cdf() {
  static const auto table = [] {
    std::array<double, kPoissonDrawCap + 1> cdf{};
    constexpr double e_inv = 0.36787944117144233;
    double pmf = e_inv;
    double acc = pmf;
    cdf[0] = acc;
    for (unsigned j = 1; j <= kPoissonDrawCap; ++j) {
      pmf /= static_cast<double>(j);
      acc += pmf;
      cdf[j] = acc;
    }
    return cdf;
  }();
  return table;
}

unsigned poisson1_draw(std::uint64_t seed, std::uint64_t i) {
  const double u = uniform01(seed, i);
  const auto& cdf = poisson1_cdf();
  for (unsigned j = 0; j <= kPoissonDrawCap; ++j) {
    if (u < cdf[j]) return j;
  }
  return kPoissonDrawCap;
}

McEstimate finish_estimate(const Rational& sum, const Rational& sum_sq,
                           std::uint64_t samples, std::uint64_t seed) {
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.exact_mean = sum / Rational(samples);
  est.mean = est.exact_mean.get_d();
  if (samples > 1) {
    // Unbiased sample variance, then variance of the mean, all exact.
    const Rational var =
        (sum_sq - sum * sum / Rational(samples)) / Rational(samples - 1);
    const Rational var_of_mean = var / Rational(samples);
    est.std_error = std::sqrt(var_of_mean.get_d());
  }
  return est;
}

void check_sample_floor(std::uint64_t samples) {
  if (samples < 1000) {
    throw std::invalid_argument("poisson_mc: need at least 1000 samples");
  }
}

}  // namespace

McEstimate poisson_mc_serial(unsigned n, const Rational& q0, std::uint64_t samples,
                             std::uint64_t seed) {
  check_sample_floor(samples);
  Rational sum(0);
  Rational sum_sq(0);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Rational v = term_value(n, q0, poisson1_draw(seed, i));
    sum += v;
    sum_sq += v * v;
  }
  return finish_estimate(sum, sum_sq, samples, seed);
}

McEstimate poisson_mc(unsigned n, const Rational& q0, std::uint64_t samples,
                      std::uint64_t seed) {
  check_sample_floor(samples);
  std::array<std::uint64_t, kPoissonDrawCap + 1> counts{};
  const long long top = static_cast<long long>(samples);
#pragma omp parallel
  {
    std::array<std::uint64_t, kPoissonDrawCap + 1> local{};
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < top; ++i) {
      ++local[poisson1_draw(seed, static_cast<std::uint64_t>(i))];
    }
#pragma omp critical
    for (unsigned j = 0; j <= kPoissonDrawCap; ++j) counts[j] += local[j];
  }
  Rational sum(0);
  Rational sum_sq(0);
  for (unsigned j = 0; j <= kPoissonDrawCap; ++j) {
    if (counts[j] == 0) continue;
    const Rational v = term_value(n, q0, j);
    const Rational weight(counts[j]);
    sum += weight * v;
    sum_sq += weight * v * v;
  }
  return finish_estimate(sum, sum_sq, samples, seed);
}

double mc_z_score(const McEstimate& est, const Rational& target) {
  if (est.std_error > 0) {
    return std::abs(est.mean - target.get_d()) / est.std_error;
  }
  return est.exact_mean == target ? 0.0 : std::numeric_limits<double>::infinity();
}

}  // namespace qbell
