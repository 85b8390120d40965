#include "scoreseq/oracle.hpp"

#include <random>
#include <string>
#include <utility>

#include "scoreseq/errors.hpp"

namespace scoreseq {

namespace {

constexpr unsigned kEnumerationLimit = 13;
constexpr unsigned kCompletionLimit = 40;

long choose2(long k) { return k * (k - 1) / 2; }

void check_enumeration_guard(unsigned n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + " requires n >= 1");
  if (n > kEnumerationLimit) {
    throw GuardError(std::string(what) + ": n=" + std::to_string(n) + " exceeds guard 13");
  }
}

// Depth-first generation. A prefix is extended only if the remaining entries,
// each at least the last value and at most n-1, can still reach C(n, 2).
void extend(unsigned n, std::vector<int>& prefix, long sum, std::vector<ScoreSequence>& out) {
  const long target = choose2(n);
  const std::size_t i = prefix.size();
  if (i == n) {
    if (sum == target) out.emplace_back(prefix);
    return;
  }
  const int start = prefix.empty() ? 0 : prefix.back();
  const long remaining_after = static_cast<long>(n - i - 1);
  for (int v = start; v < static_cast<int>(n); ++v) {
    long next = sum + v;
    if (next > target) break;
    if (next < choose2(static_cast<long>(i) + 1)) continue;
    if (next + remaining_after * v > target) break;
    if (next + remaining_after * (static_cast<long>(n) - 1) < target) continue;
    prefix.push_back(v);
    extend(n, prefix, next, out);
    prefix.pop_back();
  }
}

// Uniform integer in [0, bound) for bound >= 1.
BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng) {
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  while (true) {
    BigInt candidate = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = rng();
      if (w + 1 == words && bits % 64 != 0) word &= (std::uint64_t{1} << (bits % 64)) - 1;
      BigInt part;
      mpz_import(part.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
      candidate = (candidate << 64) + part;
    }
    if (candidate < bound) return candidate;
  }
}

}  // namespace

bool is_score_sequence(const std::vector<int>& s) {
  long sum = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0 && s[k] < s[k - 1]) return false;
    sum += s[k];
    if (sum < choose2(static_cast<long>(k) + 1)) return false;
  }
  return sum == choose2(static_cast<long>(s.size()));
}

ScoreSequence::ScoreSequence(std::vector<int> scores) : scores_(std::move(scores)) {
  if (!is_score_sequence(scores_)) throw DomainError("not a tournament score sequence");
  if (!scores_.empty() &&
      (scores_.front() < 0 || scores_.back() > static_cast<int>(scores_.size()) - 1)) {
    throw ConsistencyError("score outside [0, n-1] passed the Landau check");
  }
}

std::vector<ScoreSequence> enumerate_scores(unsigned n) {
  check_enumeration_guard(n, "enumerate_scores");
  std::vector<ScoreSequence> out;
  std::vector<int> prefix;
  prefix.reserve(n);
  extend(n, prefix, 0, out);
  return out;
}

unsigned irreducible_count(const ScoreSequence& s) {
  unsigned count = 0;
  long sum = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    sum += s[k];
    if (sum == choose2(static_cast<long>(k) + 1)) ++count;
  }
  return count;
}

bool is_strong(const ScoreSequence& s) { return irreducible_count(s) == 1; }

std::set<int> score_to_subset(const ScoreSequence& s) {
  std::set<int> subset;
  const int n = static_cast<int>(s.size());
  long sum = 0;
  for (int i = 0; i < n; ++i) {
    int v = s[static_cast<std::size_t>(i)] + i + 1;
    subset.insert(v);
    sum += v;
  }
  bool in_range = subset.empty() || (*subset.begin() >= 1 && *subset.rbegin() <= 2 * n - 1);
  if (static_cast<int>(subset.size()) != n || !in_range || sum != static_cast<long>(n) * n) {
    throw ConsistencyError("score_to_subset: image is not an n-subset of {1..2n-1} with sum n^2");
  }
  return subset;
}

std::map<unsigned, BigInt> count_by_subscores_brute(unsigned n) {
  check_enumeration_guard(n, "count_by_subscores_brute");
  std::map<unsigned, BigInt> histogram;
  for (const auto& s : enumerate_scores(n)) histogram[irreducible_count(s)] += 1;
  return histogram;
}

CompletionCounts::CompletionCounts(unsigned n) : n_(n), max_sum_(static_cast<unsigned>(choose2(n))) {
  if (n < 1) throw DomainError("completion_counts requires n >= 1");
  if (n > kCompletionLimit) {
    throw GuardError("completion_counts: n=" + std::to_string(n) + " exceeds guard 40");
  }
  table_.assign(static_cast<std::size_t>(n + 1) * n * (max_sum_ + 1), BigInt(0));
  for (unsigned s = 0; s < n; ++s) table_[index(n, s, max_sum_)] = 1;
  for (unsigned i = n; i-- > 0;) {
    const long bound = choose2(static_cast<long>(i) + 1);
    for (unsigned t = 0; t <= max_sum_; ++t) {
      // at(i, s, t) = at(i, s + 1, t) + [s valid next] * at(i + 1, s, t + s)
      BigInt running = 0;
      for (unsigned s = n; s-- > 0;) {
        long next = static_cast<long>(t) + s;
        if (next >= bound && next <= static_cast<long>(max_sum_)) {
          running += table_[index(i + 1, s, static_cast<unsigned>(next))];
        }
        table_[index(i, s, t)] = running;
      }
    }
  }
}

std::size_t CompletionCounts::index(unsigned i, unsigned s, unsigned t) const {
  return (static_cast<std::size_t>(i) * n_ + s) * (max_sum_ + 1) + t;
}

const BigInt& CompletionCounts::at(unsigned i, unsigned s, unsigned t) const {
  static const BigInt kZero = 0;
  if (i > n_ || s >= n_ || t > max_sum_) return kZero;
  return table_[index(i, s, t)];
}

CompletionCounts completion_counts(unsigned n) { return CompletionCounts(n); }

std::vector<ScoreSequence> sample_uniform(const CompletionCounts& counts, std::uint64_t seed,
                                          unsigned count) {
  const unsigned n = counts.n();
  std::mt19937_64 rng(seed);
  std::vector<ScoreSequence> out;
  out.reserve(count);
  for (unsigned c = 0; c < count; ++c) {
    std::vector<int> scores;
    scores.reserve(n);
    unsigned last = 0;
    unsigned t = 0;
    for (unsigned i = 0; i < n; ++i) {
      // Completions from (i, last, t) split by the next value v; pick v with
      // probability proportional to its share.
      BigInt r = uniform_below(counts.at(i, last, t), rng);
      unsigned v = last;
      for (;; ++v) {
        BigInt share = counts.at(i, v, t) - counts.at(i, v + 1, t);
        if (r < share) break;
        r -= share;
      }
      scores.push_back(static_cast<int>(v));
      last = v;
      t += v;
    }
    out.emplace_back(std::move(scores));
  }
  return out;
}

std::vector<ScoreSequence> sample_uniform(unsigned n, std::uint64_t seed, unsigned count) {
  return sample_uniform(CompletionCounts(n), seed, count);
}

}  // namespace scoreseq
