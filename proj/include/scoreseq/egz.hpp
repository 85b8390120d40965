#pragma once

#include <utility>
#include <vector>

#include "scoreseq/enclosure.hpp"
#include "scoreseq/exact.hpp"

namespace scoreseq {

// Number of n-element subsets of {1, ..., 2n-1} whose sum is divisible by n.
//
// Evaluated as the exact signed sum over k = 1..n of (-1)^(n+d) C(2d, d),
// d = gcd(n, k), divided by 2n. Throws ConsistencyError if the sum is not a
// multiple of 2n. Requires n >= 1.
BigInt egz_number(unsigned n);

// Direct enumeration of the n-subsets of {1..2n-1}; n in [1, 13].
BigInt egz_brute_force(unsigned n);

struct EgzBounds {
  Enclosure lower;
  Enclosure upper;
};

// Enclosures of (1/2 sqrt(pi)) 4^n / n^(3/2) times (1 - 1/4n) and times 1.
// For n >= 10 these bracket egz_number(n). Precision in [10, 38].
EgzBounds egz_bounds(unsigned n, int precision = 30);

// Enclosures of 4^n / sqrt(pi n) times (1 - 1/8n) and (1 - 1/9n), which
// bracket C(2n, n) for n >= 1. Precision in [10, 38].
struct CentralBinomialBounds {
  Enclosure lower;
  Enclosure upper;
};
CentralBinomialBounds central_binomial_bounds(unsigned n, int precision = 30);

// N_1..N_{n_max}, computed by grouping the k-sum by d = gcd(n, k): each
// divisor d of n occurs phi(n/d) times.
class EgzTable {
 public:
  explicit EgzTable(std::vector<BigInt> values);

  unsigned n_max() const { return static_cast<unsigned>(values_.size()); }
  // N_n for 1 <= n <= n_max.
  const BigInt& operator[](unsigned n) const { return values_.at(n - 1); }
  const std::vector<BigInt>& values() const { return values_; }

 private:
  std::vector<BigInt> values_;
};

EgzTable egz_table(unsigned n_max);

}  // namespace scoreseq
