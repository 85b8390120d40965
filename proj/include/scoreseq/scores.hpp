#pragma once

#include <vector>

#include "scoreseq/egz.hpp"
#include "scoreseq/exact.hpp"
#include "scoreseq/series.hpp"

namespace scoreseq {

// S_0..S_{n_max}: the number of score sequences of tournaments on n teams.
class ScoreTable {
 public:
  explicit ScoreTable(std::vector<BigInt> values);

  unsigned n_max() const { return static_cast<unsigned>(values_.size() - 1); }
  const BigInt& operator[](unsigned n) const { return values_.at(n); }
  const std::vector<BigInt>& values() const { return values_; }
  ExactSeries series() const { return ExactSeries::from_integers(values_); }

 private:
  std::vector<BigInt> values_;
};

// n S_n = sum_{k=1..n} N_k S_{n-k}, S_0 = 1. Each right-hand side is checked
// for divisibility by n (ConsistencyError otherwise).
ScoreTable count_scores(unsigned n_max);
ScoreTable count_scores(const EgzTable& egz, unsigned n_max);

// S_n as a sum over integer partitions of n with part multiplicities m_l:
//   prod_l N_l^{m_l} / (l^{m_l} m_l!)
// i.e. the average over permutations of the product of N over cycle lengths.
// 1 <= n <= 20.
BigInt scores_via_cycle_types(unsigned n);

}  // namespace scoreseq
