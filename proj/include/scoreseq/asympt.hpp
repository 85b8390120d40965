#pragma once

#include <map>
#include <span>
#include <vector>

#include "scoreseq/decomp.hpp"
#include "scoreseq/egz.hpp"
#include "scoreseq/enclosure.hpp"
#include "scoreseq/exact.hpp"
#include "scoreseq/scores.hpp"
#include "scoreseq/series.hpp"

namespace scoreseq {

// How the tail sum_{k>n} N_k / (k 4^k) is bounded, given
//   N_k <= (1/2 sqrt(pi)) 4^k / k^(3/2)          (k >= 10).
// Both rules use the lower bound (1/3 sqrt(pi)) n^(-3/2) (1 - 2/n).
//  - integral: upper bound (1/3 sqrt(pi)) n^(-3/2), from the integral over [n, inf).
//  - midpoint: upper bound (1/3 sqrt(pi)) (n + 1/2)^(-3/2). Since x^(-5/2) is
//    convex, k^(-5/2) <= integral over [k - 1/2, k + 1/2], which sharpens the
//    integral rule.
enum class TailRule { integral, midpoint };

/// Certified enclosure of lambda = sum_{k>=1} N_k / (k 4^k).
struct LambdaEnclosure {
  unsigned terms = 0;
  BigRat partial_sum;  // exact sum over k <= terms
  Enclosure tail_lo;   // encloses the lower tail bound
  Enclosure tail_hi;   // encloses the upper tail bound
  Enclosure enclosure; // [partial + tail_lo.lo, partial + tail_hi.hi]
};

constexpr int kDefaultPrecision = 30;

// terms >= 10, precision in [10, 38].
LambdaEnclosure lambda_enclosure(unsigned terms, int precision = kDefaultPrecision,
                                 TailRule rule = TailRule::midpoint);
LambdaEnclosure lambda_enclosure(const EgzTable& egz, unsigned terms,
                                 int precision = kDefaultPrecision,
                                 TailRule rule = TailRule::midpoint);

/// Limit constants derived from an enclosure of lambda.
struct ConstantSet {
  Enclosure e_lambda;       // e^lambda
  Enclosure takacs;         // e^lambda / 2 sqrt(pi): limit of n^(5/2) S_n / 4^n
  Enclosure inv_e_lambda;   // e^-lambda: limit of E[1 / I_n]
  Enclosure strong_frac;    // e^-2 lambda: limit of S_{n,1} / S_n
  Enclosure strong_takacs;  // e^-lambda / 2 sqrt(pi)
  Enclosure nb_mean;        // 2 (1 - e^-lambda) e^lambda + 1
  Enclosure nb_variance;    // 2 (1 - e^-lambda) e^(2 lambda)
};

ConstantSet constants(const LambdaEnclosure& lambda, int precision = kDefaultPrecision);

// Exact sequence tables shared by the diagnostics.
struct SequenceBundle {
  EgzTable egz;           // N_1..N_{n_max}
  ScoreTable scores;      // S_0..S_{n_max}
  std::vector<BigInt> strong;  // S_{0,1}..S_{n_max,1}, S_{0,1} = 0

  unsigned n_max() const { return scores.n_max(); }
};

SequenceBundle make_bundle(unsigned n_max);

struct DiagnosticRow {
  unsigned n = 0;
  Enclosure takacs_ratio;         // n^(5/2) S_n / 4^n
  Enclosure strong_takacs_ratio;  // n^(5/2) S_{n,1} / 4^n
  Enclosure strong_ratio;         // S_{n,1} / S_n
  Enclosure inv_mean;             // N_n / (n S_n)
  Enclosure beta_conv_ratio;      // beta^{*2}_n / (2 beta_n), beta_n = N_n / (n 4^n)
  Enclosure partial_gf;           // sum_{k<=n} S_k / 4^k
};

// Every ratio is formed exactly and rounded once (takacs ratios carry one
// extra enclosure factor for sqrt(n)). Grid points must lie in [1, n_max].
std::vector<DiagnosticRow> diagnostics(std::span<const unsigned> grid, const SequenceBundle& bundle,
                                       int precision = kDefaultPrecision);
std::vector<DiagnosticRow> diagnostics(std::span<const unsigned> grid,
                                       int precision = kDefaultPrecision);

/// p_n = e^-lambda S_n / 4^n, n = 0..n_max.
struct TournamentPmf {
  unsigned n_max = 0;
  std::vector<Enclosure> probs;
  std::vector<Enclosure> partial_sums;  // e^-lambda * exact sum_{k<=n} S_k / 4^k
};

TournamentPmf tournament_pmf(const ScoreTable& scores, unsigned n_max,
                             const LambdaEnclosure& lambda, int precision = kDefaultPrecision);

/// Shifted negative binomial limit of I_n:
///   P(I = m) = m (1 - e^-lambda)^(m-1) e^(-2 lambda),  m >= 1.
class NbLimitLaw {
 public:
  NbLimitLaw(const Enclosure& lambda, int precision = kDefaultPrecision);

  Enclosure pmf(unsigned m) const;
  // P(I > m) = q^m (1 + m p), q = 1 - e^-lambda, p = e^-lambda.
  Enclosure tail(unsigned m) const;
  const Enclosure& failure_prob() const { return q_; }

 private:
  int precision_;
  Enclosure p_;
  Enclosure q_;
  Enclosure p_squared_;
};

Enclosure nb_pmf(unsigned m, const Enclosure& lambda, int precision = kDefaultPrecision);
Enclosure nb_pmf(unsigned m, const LambdaEnclosure& lambda, int precision = kDefaultPrecision);

// 1/2 sum |a_m - b_m| over the union of supports.
BigRat total_variation(const std::map<unsigned, BigRat>& a, const std::map<unsigned, BigRat>& b);

/// Total variation between the exact law of I_n (probabilities for
/// m <= m_max) and the limit law evaluated at enclosure midpoints. The true
/// distance lies in [distance, distance + truncation_slack].
struct NbDistance {
  unsigned n = 0;
  unsigned m_max = 0;
  BigRat distance;
  BigRat truncation_slack;
};

NbDistance nb_limit_distance(const SubscorePmf& pmf, const NbLimitLaw& law);
NbDistance nb_limit_distance(unsigned n, const LambdaEnclosure& lambda,
                             int precision = kDefaultPrecision);

/// Compound Poisson reconstructions, evaluated at the midpoint of the lambda
/// enclosure (the identities hold for every lambda). Poisson counts are
/// truncated at `truncation`, which is exact for indices <= truncation.
///  - nb: rate 2 lambda, logarithmic jumps P(X = k) = q^k / (k lambda),
///    q = 1 - e^-lambda; compared with the limit pmf at m = j + 1.
///  - tournament: rate lambda, jumps P(X = k) = beta_k / lambda; compared
///    with p_n.
///  - printed: rate -2 log(1 - e^-lambda), jumps proportional to e^(-lambda k)/k;
///    this reconstructs a negative binomial with p = 1 - e^-lambda and is
///    reported, not required to match.
struct CompoundPoissonReport {
  unsigned truncation = 0;
  std::vector<BigRat> nb_deviation;          // index j = m - 1
  std::vector<BigRat> tournament_deviation;  // index n
  std::vector<BigRat> printed_deviation;     // index j = m - 1

  // Largest nb / tournament deviation over indices <= upto.
  BigRat max_deviation(unsigned upto) const;
  BigRat max_deviation() const { return max_deviation(truncation); }
};

// truncation >= 10.
CompoundPoissonReport compound_poisson_check(const LambdaEnclosure& lambda, unsigned truncation,
                                             int precision = 40);

}  // namespace scoreseq
