#pragma once

#include <map>
#include <vector>

#include "scoreseq/egz.hpp"
#include "scoreseq/exact.hpp"
#include "scoreseq/scores.hpp"
#include "scoreseq/series.hpp"

namespace scoreseq {

// Strong (irreducible) counts S_{n,1} as a series with constant term 0, from
// S(x) = 1 / (1 - S_1(x)), i.e. S_{n,1} = S_n - sum_{k<n} S_{k,1} S_{n-k}.
ExactSeries strong_series(unsigned n_max);
ExactSeries strong_series(const ScoreTable& scores);

/// S_{n,m}: score sequences on n teams with exactly m irreducible subscores,
/// for 1 <= n <= n_max and 1 <= m <= min(n, m_max).
class SubscoreTable {
 public:
  SubscoreTable(unsigned n_max, unsigned m_max, std::vector<std::vector<BigInt>> columns);

  unsigned n_max() const { return n_max_; }
  unsigned m_max() const { return m_max_; }
  // S_{n,m}; zero for m > n. Throws GuardError for m beyond m_max.
  const BigInt& count(unsigned n, unsigned m) const;
  // S_{n,1}, ..., S_{n,min(n, m_max)}
  std::vector<BigInt> row(unsigned n) const;

 private:
  unsigned n_max_;
  unsigned m_max_;
  // columns_[m-1][n] = S_{n,m}, n = 0..n_max
  std::vector<std::vector<BigInt>> columns_;
};

// Column m is the m-th convolution power of the strong series, built as
// S_1 * S_{m-1}.
SubscoreTable subscore_counts(unsigned n_max, unsigned m_max);
SubscoreTable subscore_counts(const ScoreTable& scores, unsigned m_max);

// n * sum_m S_{n,m} / m, checked against egz_number(n). Throws
// VerificationError on mismatch.
BigInt verify_egz_identity(unsigned n);
BigInt verify_egz_identity(unsigned n, const SubscoreTable& table, const BigInt& egz_value);

/// Exact law of the number of irreducible subscores of a uniform score
/// sequence on n teams.
struct SubscorePmf {
  unsigned n = 0;
  std::map<unsigned, BigRat> probs;  // m -> S_{n,m} / S_n, every m in 1..min(n, m_max)
  BigRat tail_mass;                  // 1 - sum of probs (nonzero only when truncated)

  BigRat mean() const;
  BigRat variance() const;
  BigRat inverse_mean() const;  // E[1 / I_n]
};

constexpr unsigned kDefaultPmfMMax = 40;

// Probabilities for m <= min(n, m_max); the rest is reported as tail_mass.
SubscorePmf subscore_pmf(unsigned n, unsigned m_max = kDefaultPmfMMax);
SubscorePmf subscore_pmf(unsigned n, const SubscoreTable& table, const BigInt& total);

}  // namespace scoreseq
