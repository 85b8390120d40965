#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "scoreseq/exact.hpp"

namespace scoreseq {

// Non-decreasing s with sum_{i<=k} s_i >= C(k, 2) for every k and equality at
// k = n. The empty sequence is accepted (n = 0).
bool is_score_sequence(const std::vector<int>& s);

/// A validated tournament score sequence.
class ScoreSequence {
 public:
  // Throws DomainError unless is_score_sequence(scores).
  explicit ScoreSequence(std::vector<int> scores);

  std::size_t size() const { return scores_.size(); }
  int operator[](std::size_t i) const { return scores_[i]; }
  const std::vector<int>& scores() const { return scores_; }

  friend auto operator<=>(const ScoreSequence&, const ScoreSequence&) = default;

 private:
  std::vector<int> scores_;
};

// All score sequences on n teams in lexicographic order; 1 <= n <= 13.
std::vector<ScoreSequence> enumerate_scores(unsigned n);

// Number of k in 1..n with sum_{i<=k} s_i = C(k, 2); always >= 1.
unsigned irreducible_count(const ScoreSequence& s);

bool is_strong(const ScoreSequence& s);

// {s_1 + 1, s_2 + 2, ..., s_n + n}: an n-subset of {1..2n-1} summing to n^2.
std::set<int> score_to_subset(const ScoreSequence& s);

// Histogram of irreducible_count over enumerate_scores(n); 1 <= n <= 13.
std::map<unsigned, BigInt> count_by_subscores_brute(unsigned n);

/// Number of valid completions of a partial score sequence.
///
/// at(i, s, t) counts ways to choose s_{i+1} <= ... <= s_n, all >= s, such
/// that, starting from prefix sum t after i entries, every prefix meets its
/// Landau bound and the total is C(n, 2). at(0, 0, 0) = S_n.
class CompletionCounts {
 public:
  // 1 <= n <= 40.
  explicit CompletionCounts(unsigned n);

  unsigned n() const { return n_; }
  // Zero outside the table range.
  const BigInt& at(unsigned i, unsigned s, unsigned t) const;
  const BigInt& total() const { return at(0, 0, 0); }

 private:
  std::size_t index(unsigned i, unsigned s, unsigned t) const;

  unsigned n_;
  unsigned max_sum_;
  std::vector<BigInt> table_;
};

CompletionCounts completion_counts(unsigned n);

// `count` exactly uniform samples. Randomness comes from std::mt19937_64
// seeded with `seed`; each choice draws a uniform integer below the relevant
// completion count by rejection on raw 64-bit words, so results are
// reproducible across platforms.
std::vector<ScoreSequence> sample_uniform(unsigned n, std::uint64_t seed, unsigned count);
std::vector<ScoreSequence> sample_uniform(const CompletionCounts& counts, std::uint64_t seed,
                                          unsigned count);

}  // namespace scoreseq
