#include "qbell/classical_bell.hpp"

#include <stdexcept>
#include <utility>

namespace qbell {

StirlingTable::StirlingTable(unsigned n_max) {
  rows_.reserve(n_max + 1);
  rows_.push_back({Integer(1)});
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto& prev = rows_.back();
    std::vector<Integer> row(n + 1);
    row[0] = 0;
    row[n] = 1;
    for (unsigned k = 1; k < n; ++k) {
      row[k] = Integer(k) * prev[k] + prev[k - 1];
    }
    rows_.push_back(std::move(row));
  }
}

const Integer& StirlingTable::at(unsigned n, unsigned k) const {
  if (n >= rows_.size() || k > n) {
    throw std::out_of_range("StirlingTable::at: index outside the triangle");
  }
  return rows_[n][k];
}

Integer stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  return StirlingTable(n).at(n, k);
}

std::vector<Integer> bell_sequence(unsigned n_max) {
  std::vector<Integer> out;
  out.reserve(n_max + 1);
  out.push_back(1);
  std::vector<Integer> row{Integer(1)};
  for (unsigned n = 1; n <= n_max; ++n) {
    std::vector<Integer> next(n + 1);
    next[0] = row.back();
    for (unsigned j = 0; j < n; ++j) {
      next[j + 1] = next[j] + row[j];
    }
    row = std::move(next);
    out.push_back(row[0]);
  }
  return out;
}

Integer bell(unsigned n) { return bell_sequence(n).back(); }

namespace {

// Walks every restricted growth string a[0..n-1] (a[0] = 0,
// a[i] <= 1 + max of the earlier entries); one leaf per set partition.
Integer count_rgs(unsigned pos, unsigned n, unsigned max_used) {
  if (pos == n) return 1;
  Integer total = 0;
  for (unsigned v = 0; v <= max_used + 1; ++v) {
    total += count_rgs(pos + 1, n, v > max_used ? v : max_used);
  }
  return total;
}

}  // namespace

Integer enumerate_set_partitions(unsigned n) {
  if (n > 12) {
    throw std::invalid_argument(
        "enumerate_set_partitions: n > 12 (enumeration cost guard)");
  }
  if (n == 0) return 1;
  return count_rgs(1, n, 0);
}

}  // namespace qbell
