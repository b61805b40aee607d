#pragma once

#include <vector>

#include "qbell/rational.hpp"

namespace qbell {

// Triangular table of Stirling numbers of the second kind, rows 0..n_max,
// built from S(n,k) = k*S(n-1,k) + S(n-1,k-1). Immutable after construction.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned n_max);

  unsigned n_max() const { return static_cast<unsigned>(rows_.size()) - 1; }
  const Integer& at(unsigned n, unsigned k) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

// Number of partitions of an n-set into k nonempty blocks; 0 when k > n.
Integer stirling2(unsigned n, unsigned k);

// B_n by the Bell triangle recurrence.
Integer bell(unsigned n);

// B_0..B_n_max in one triangle pass.
std::vector<Integer> bell_sequence(unsigned n_max);

// Counts the partitions of {1..n} by walking every restricted growth
// string explicitly. Brute-force oracle; rejects n > 12.
Integer enumerate_set_partitions(unsigned n);

}  // namespace qbell
