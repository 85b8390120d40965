#include "scoreseq/egz.hpp"

#include <string>

#include "scoreseq/errors.hpp"

namespace scoreseq {

namespace {

constexpr unsigned kBruteForceLimit = 13;

// Sign of the C(2d, d) term. SCORESEQ_MUTATE_EGZ_SIGN flips it for d < n;
// only the mutation-test build of the CLI defines it.
int term_sign(unsigned n, unsigned d) {
  int sign = (n + d) % 2 == 0 ? 1 : -1;
#ifdef SCORESEQ_MUTATE_EGZ_SIGN
  if (d < n) sign = -sign;
#endif
  return sign;
}

BigInt divide_checked(const BigInt& signed_sum, unsigned n) {
  BigInt denom = 2 * n;
  if (signed_sum % denom != 0) {
    throw ConsistencyError("egz divisibility: signed binomial sum for n=" + std::to_string(n) +
                           " is not divisible by 2n");
  }
  return signed_sum / denom;
}

unsigned long euler_phi(unsigned long m) {
  unsigned long result = m;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// Counts size-`remaining` subsets of {next..top} that bring the running sum
// residue mod n to zero.
void count_subsets(unsigned next, unsigned top, unsigned remaining, unsigned residue, unsigned n,
                   unsigned long long& count) {
  if (remaining == 0) {
    if (residue == 0) ++count;
    return;
  }
  for (unsigned v = next; v + remaining - 1 <= top; ++v) {
    count_subsets(v + 1, top, remaining - 1, (residue + v) % n, n, count);
  }
}

}  // namespace

BigInt egz_number(unsigned n) {
  if (n < 1) throw DomainError("egz_number requires n >= 1");
  BigInt sum = 0;
  for (unsigned k = 1; k <= n; ++k) {
    unsigned d = static_cast<unsigned>(gcd(n, k));
    BigInt term = binomial(2 * d, d);
    if (term_sign(n, d) > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return divide_checked(sum, n);
}

BigInt egz_brute_force(unsigned n) {
  if (n < 1) throw DomainError("egz_brute_force requires n >= 1");
  if (n > kBruteForceLimit) {
    throw GuardError("egz_brute_force: n=" + std::to_string(n) + " exceeds enumeration guard 13");
  }
  unsigned long long count = 0;
  count_subsets(1, 2 * n - 1, n, 0, n, count);
  return BigInt(std::to_string(count));
}

EgzBounds egz_bounds(unsigned n, int precision) {
  if (n < 10) throw DomainError("egz_bounds requires n >= 10");
  Enclosure two_sqrt_pi = Enclosure::exact(2, precision) * sqrt_pi_enclosure(precision);
  Enclosure n_sqrt = sqrt_enclosure(Enclosure::exact(n, 0), precision);
  Enclosure n_three_halves = Enclosure::exact(n, precision) * n_sqrt;
  Enclosure upper = Enclosure::exact(BigRat(pow4(n)), precision) / (two_sqrt_pi * n_three_halves);
  BigRat shrink = 1 - ratio(1, 4 * n);
  Enclosure lower = upper * rat_to_enclosure(shrink, precision);
  return {lower, upper};
}

CentralBinomialBounds central_binomial_bounds(unsigned n, int precision) {
  if (n < 1) throw DomainError("central_binomial_bounds requires n >= 1");
  Enclosure pi_n = pi_enclosure() * Enclosure::exact(n, 0);
  Enclosure base = Enclosure::exact(BigRat(pow4(n)), precision) / sqrt_enclosure(pi_n, precision);
  return {base * rat_to_enclosure(1 - ratio(1, 8 * n), precision),
          base * rat_to_enclosure(1 - ratio(1, 9 * n), precision)};
}

EgzTable::EgzTable(std::vector<BigInt> values) : values_(std::move(values)) {}

EgzTable egz_table(unsigned n_max) {
  if (n_max < 1) throw DomainError("egz_table requires n_max >= 1");
  std::vector<BigInt> central(n_max + 1);
  central[0] = 1;
  for (unsigned d = 1; d <= n_max; ++d) {
    central[d] = central[d - 1] * (2 * (2 * d - 1));
    central[d] /= d;
  }
  std::vector<BigInt> values;
  values.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    BigInt sum = 0;
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      BigInt term = central[d] * euler_phi(n / d);
      if (term_sign(n, d) > 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    values.push_back(divide_checked(sum, n));
  }
  return EgzTable(std::move(values));
}

}  // namespace scoreseq
