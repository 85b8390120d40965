#include "scoreseq/scores.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "scoreseq/errors.hpp"

namespace scoreseq {

namespace {

constexpr unsigned kCycleTypeLimit = 20;

// Calls visit(multiplicity) for every partition of n, where multiplicity[l]
// counts parts equal to l. Partitions are produced in reverse lexicographic
// order of their part lists, starting from (n).
template <typename Visit>
void for_each_partition(unsigned n, Visit&& visit) {
  std::vector<unsigned> parts = {n};
  std::vector<unsigned> multiplicity(n + 1, 0);
  while (true) {
    std::fill(multiplicity.begin(), multiplicity.end(), 0U);
    for (unsigned p : parts) ++multiplicity[p];
    visit(multiplicity);
    // Next partition: drop trailing 1s, decrement the last part > 1 and
    // refill greedily with copies of the decremented value.
    unsigned ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) return;
    unsigned value = parts.back() - 1;
    parts.pop_back();
    unsigned rest = ones + 1 + value;
    while (rest >= value) {
      parts.push_back(value);
      rest -= value;
    }
    if (rest > 0) parts.push_back(rest);
  }
}

}  // namespace

ScoreTable::ScoreTable(std::vector<BigInt> values) : values_(std::move(values)) {
  if (values_.empty() || values_[0] != 1) throw ConsistencyError("score table must start with S_0 = 1");
}

ScoreTable count_scores(const EgzTable& egz, unsigned n_max) {
  if (n_max > egz.n_max() && n_max > 0) throw DomainError("count_scores: EGZ table too short");
  std::vector<BigInt> s(n_max + 1);
  s[0] = 1;
  BigInt acc;
  for (unsigned n = 1; n <= n_max; ++n) {
    acc = 0;
    for (unsigned k = 1; k <= n; ++k) {
      mpz_addmul(acc.get_mpz_t(), egz[k].get_mpz_t(), s[n - k].get_mpz_t());
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), n)) {
      throw ConsistencyError("score recurrence: sum for n=" + std::to_string(n) +
                             " is not divisible by n");
    }
    mpz_divexact_ui(s[n].get_mpz_t(), acc.get_mpz_t(), n);
  }
  return ScoreTable(std::move(s));
}

ScoreTable count_scores(unsigned n_max) {
  if (n_max == 0) return ScoreTable({BigInt(1)});
  return count_scores(egz_table(n_max), n_max);
}

BigInt scores_via_cycle_types(unsigned n) {
  if (n < 1) throw DomainError("scores_via_cycle_types requires n >= 1");
  if (n > kCycleTypeLimit) {
    throw GuardError("scores_via_cycle_types: n=" + std::to_string(n) + " exceeds guard 20");
  }
  EgzTable egz = egz_table(n);
  BigRat total = 0;
  for_each_partition(n, [&](const std::vector<unsigned>& multiplicity) {
    BigRat term = 1;
    for (unsigned l = 1; l <= n; ++l) {
      unsigned m = multiplicity[l];
      if (m == 0) continue;
      BigInt num;
      mpz_pow_ui(num.get_mpz_t(), egz[l].get_mpz_t(), m);
      BigInt den;
      mpz_ui_pow_ui(den.get_mpz_t(), l, m);
      BigInt fact;
      mpz_fac_ui(fact.get_mpz_t(), m);
      BigRat factor = ratio(num, den * fact);
      factor.canonicalize();
      term *= factor;
    }
    total += term;
  });
  if (!is_integral(total)) {
    throw ConsistencyError("cycle-type sum for n=" + std::to_string(n) + " is not an integer");
  }
  return total.get_num();
}

}  // namespace scoreseq
