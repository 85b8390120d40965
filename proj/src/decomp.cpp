#include "scoreseq/decomp.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "scoreseq/errors.hpp"

namespace scoreseq {

ExactSeries strong_series(const ScoreTable& scores) {
  const unsigned n_max = scores.n_max();
  std::vector<BigInt> strong(n_max + 1, BigInt(0));
  BigInt acc;
  for (unsigned n = 1; n <= n_max; ++n) {
    acc = scores[n];
    for (unsigned k = 1; k < n; ++k) {
      mpz_submul(acc.get_mpz_t(), strong[k].get_mpz_t(), scores[n - k].get_mpz_t());
    }
    if (acc < 0) {
      throw ConsistencyError("strong count S_{" + std::to_string(n) + ",1} came out negative");
    }
    strong[n] = acc;
  }
  return ExactSeries::from_integers(strong);
}

ExactSeries strong_series(unsigned n_max) {
  if (n_max < 1) throw DomainError("strong_series requires n_max >= 1");
  return strong_series(count_scores(n_max));
}

SubscoreTable::SubscoreTable(unsigned n_max, unsigned m_max,
                             std::vector<std::vector<BigInt>> columns)
    : n_max_(n_max), m_max_(m_max), columns_(std::move(columns)) {}

const BigInt& SubscoreTable::count(unsigned n, unsigned m) const {
  static const BigInt kZero = 0;
  if (n < 1 || n > n_max_ || m < 1) throw DomainError("subscore count index out of range");
  if (m > n) return kZero;
  if (m > columns_.size()) {
    throw GuardError("subscore count: m=" + std::to_string(m) + " beyond table m_max");
  }
  return columns_[m - 1][n];
}

std::vector<BigInt> SubscoreTable::row(unsigned n) const {
  std::vector<BigInt> out;
  unsigned top = std::min(n, static_cast<unsigned>(columns_.size()));
  for (unsigned m = 1; m <= top; ++m) out.push_back(count(n, m));
  return out;
}

SubscoreTable subscore_counts(const ScoreTable& scores, unsigned m_max) {
  if (m_max < 1) throw DomainError("subscore_counts requires m_max >= 1");
  const unsigned n_max = scores.n_max();
  if (n_max < 1) throw DomainError("subscore_counts requires n_max >= 1");
  const std::size_t length = n_max + 1;
  ExactSeries strong = strong_series(scores);
  std::vector<std::vector<BigInt>> columns;
  const unsigned top = std::min(m_max, n_max);
  columns.reserve(top);
  ExactSeries power = strong;
  columns.push_back(power.to_integers());
  for (unsigned m = 2; m <= top; ++m) {
    power = convolve(strong, power, length);
    columns.push_back(power.to_integers());
  }
  return SubscoreTable(n_max, m_max, std::move(columns));
}

SubscoreTable subscore_counts(unsigned n_max, unsigned m_max) {
  if (n_max < 1) throw DomainError("subscore_counts requires n_max >= 1");
  return subscore_counts(count_scores(n_max), m_max);
}

BigInt verify_egz_identity(unsigned n, const SubscoreTable& table, const BigInt& egz_value) {
  if (n < 1) throw DomainError("verify_egz_identity requires n >= 1");
  if (table.m_max() < n) throw DomainError("verify_egz_identity needs the full row (m_max >= n)");
  BigRat sum = 0;
  for (unsigned m = 1; m <= n; ++m) sum += ratio(table.count(n, m), m);
  sum *= n;
  if (sum != BigRat(egz_value)) {
    throw VerificationError("subscore identity fails at n=" + std::to_string(n) + ": " +
                            to_string(sum) + " != " + to_string(egz_value));
  }
  return egz_value;
}

BigInt verify_egz_identity(unsigned n) {
  if (n < 1) throw DomainError("verify_egz_identity requires n >= 1");
  return verify_egz_identity(n, subscore_counts(n, n), egz_number(n));
}

BigRat SubscorePmf::mean() const {
  BigRat sum = 0;
  for (const auto& [m, p] : probs) sum += p * m;
  return sum;
}

BigRat SubscorePmf::variance() const {
  BigRat second = 0;
  for (const auto& [m, p] : probs) second += p * (m * m);
  BigRat mu = mean();
  return second - mu * mu;
}

BigRat SubscorePmf::inverse_mean() const {
  BigRat sum = 0;
  for (const auto& [m, p] : probs) sum += p / m;
  return sum;
}

SubscorePmf subscore_pmf(unsigned n, const SubscoreTable& table, const BigInt& total) {
  if (n < 1) throw DomainError("subscore_pmf requires n >= 1");
  SubscorePmf pmf;
  pmf.n = n;
  BigRat mass = 0;
  unsigned top = std::min(n, table.m_max());
  for (unsigned m = 1; m <= top; ++m) {
    BigRat p = ratio(table.count(n, m), total);
    p.canonicalize();
    mass += p;
    pmf.probs.emplace(m, p);
  }
  pmf.tail_mass = 1 - mass;
  if (pmf.tail_mass < 0 || (top == n && pmf.tail_mass != 0)) {
    throw ConsistencyError("subscore row for n=" + std::to_string(n) + " does not sum to S_n");
  }
  return pmf;
}

SubscorePmf subscore_pmf(unsigned n, unsigned m_max) {
  if (n < 1) throw DomainError("subscore_pmf requires n >= 1");
  ScoreTable scores = count_scores(n);
  return subscore_pmf(n, subscore_counts(scores, std::min(n, m_max)), scores[n]);
}

}  // namespace scoreseq
