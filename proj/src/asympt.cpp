#include "scoreseq/asympt.hpp"

#include <algorithm>
#include <string>

#include "scoreseq/errors.hpp"

namespace scoreseq {

namespace {

Enclosure integer(long v, int precision) { return Enclosure::exact(BigRat(v), precision); }

// (1/3 sqrt(pi)) x^(-3/2)
Enclosure tail_scale(const BigRat& x, int precision) {
  Enclosure x_enc = rat_to_enclosure(x, precision);
  Enclosure x_three_halves = x_enc * sqrt_enclosure(x_enc, precision);
  Enclosure three_sqrt_pi = integer(3, precision) * sqrt_pi_enclosure(precision);
  return integer(1, precision) / (three_sqrt_pi * x_three_halves);
}

// Rational midpoint of an enclosure as a point enclosure.
Enclosure midpoint_point(const Enclosure& e) {
  return Enclosure::exact(e.midpoint(), e.precision() + 1);
}

BigRat abs_difference(const Enclosure& a, const Enclosure& b) {
  return abs(a.midpoint() - b.midpoint());
}

}  // namespace

LambdaEnclosure lambda_enclosure(const EgzTable& egz, unsigned terms, int precision,
                                 TailRule rule) {
  if (terms < 10) throw DomainError("lambda_enclosure requires terms >= 10");
  if (egz.n_max() < terms) throw DomainError("lambda_enclosure: EGZ table too short");
  LambdaEnclosure out;
  out.terms = terms;
  out.partial_sum = 0;
  for (unsigned k = 1; k <= terms; ++k) {
    BigRat term = ratio(egz[k], pow4(k) * k);
    term.canonicalize();
    out.partial_sum += term;
  }
  Enclosure base = tail_scale(BigRat(terms), precision);
  out.tail_lo = base * rat_to_enclosure(1 - ratio(2, terms), precision);
  out.tail_hi = rule == TailRule::integral
                    ? base
                    : tail_scale(ratio(2 * terms + 1, 2), precision);
  out.enclosure = Enclosure::from_bounds(out.partial_sum + out.tail_lo.lo(),
                                         out.partial_sum + out.tail_hi.hi(), precision);
  return out;
}

LambdaEnclosure lambda_enclosure(unsigned terms, int precision, TailRule rule) {
  if (terms < 10) throw DomainError("lambda_enclosure requires terms >= 10");
  return lambda_enclosure(egz_table(terms), terms, precision, rule);
}

ConstantSet constants(const LambdaEnclosure& lambda, int precision) {
  const Enclosure& lam = lambda.enclosure;
  Enclosure two_sqrt_pi = integer(2, precision) * sqrt_pi_enclosure(precision);
  ConstantSet c;
  c.e_lambda = exp_enclosure(lam, precision);
  c.inv_e_lambda = exp_enclosure(-lam, precision);
  c.strong_frac = exp_enclosure(integer(-2, 0) * lam, precision);
  c.takacs = c.e_lambda / two_sqrt_pi;
  c.strong_takacs = c.inv_e_lambda / two_sqrt_pi;
  // 2 (1 - e^-l) e^l + 1 = 2 e^l - 1 and 2 (1 - e^-l) e^(2l) = 2 (e^l - 1) e^l;
  // both are monotone in e^l, so these forms give sharp enclosures.
  Enclosure one = integer(1, precision);
  c.nb_mean = integer(2, precision) * c.e_lambda - one;
  c.nb_variance = integer(2, precision) * (c.e_lambda - one) * c.e_lambda;
  return c;
}

SequenceBundle make_bundle(unsigned n_max) {
  if (n_max < 1) throw DomainError("make_bundle requires n_max >= 1");
  EgzTable egz = egz_table(n_max);
  ScoreTable scores = count_scores(egz, n_max);
  std::vector<BigInt> strong = strong_series(scores).to_integers();
  return SequenceBundle{std::move(egz), std::move(scores), std::move(strong)};
}

std::vector<DiagnosticRow> diagnostics(std::span<const unsigned> grid, const SequenceBundle& bundle,
                                       int precision) {
  if (grid.empty()) return {};
  unsigned top = *std::max_element(grid.begin(), grid.end());
  if (top > bundle.n_max()) throw DomainError("diagnostics: grid exceeds the computed tables");
  if (*std::min_element(grid.begin(), grid.end()) < 1) {
    throw DomainError("diagnostics: grid points must be >= 1");
  }

  std::vector<BigRat> beta(top + 1, BigRat(0));
  for (unsigned k = 1; k <= top; ++k) {
    beta[k] = ratio(bundle.egz[k], pow4(k) * k);
    beta[k].canonicalize();
  }
  ExactSeries beta_series(beta);

  // Horner numerators: gf_num[n] = sum_{k<=n} S_k 4^(n-k)
  std::vector<BigInt> gf_num(top + 1);
  gf_num[0] = bundle.scores[0];
  for (unsigned n = 1; n <= top; ++n) gf_num[n] = gf_num[n - 1] * 4 + bundle.scores[n];

  const int guard = precision + 10;
  std::vector<DiagnosticRow> rows;
  rows.reserve(grid.size());
  for (unsigned n : grid) {
    const BigInt& s = bundle.scores[n];
    const BigInt& strong = bundle.strong[n];
    const BigInt& egz_n = bundle.egz[n];
    BigInt four_n = pow4(n);
    Enclosure root_n = sqrt_enclosure(integer(n, 0), guard);

    DiagnosticRow row;
    row.n = n;
    BigRat takacs_part = ratio(s * n * n, four_n);
    takacs_part.canonicalize();
    row.takacs_ratio = (rat_to_enclosure(takacs_part, guard) * root_n).with_precision(precision);
    BigRat strong_part = ratio(strong * n * n, four_n);
    strong_part.canonicalize();
    row.strong_takacs_ratio =
        (rat_to_enclosure(strong_part, guard) * root_n).with_precision(precision);

    BigRat strong_ratio = ratio(strong, s);
    strong_ratio.canonicalize();
    row.strong_ratio = rat_to_enclosure(strong_ratio, precision);

    BigRat inv_mean = ratio(egz_n, s * n);
    inv_mean.canonicalize();
    row.inv_mean = rat_to_enclosure(inv_mean, precision);

    BigRat conv = convolution_coefficient(beta_series, beta_series, n);
    row.beta_conv_ratio = rat_to_enclosure(conv / (2 * beta[n]), precision);

    BigRat gf = ratio(gf_num[n], four_n);
    gf.canonicalize();
    row.partial_gf = rat_to_enclosure(gf, precision);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<DiagnosticRow> diagnostics(std::span<const unsigned> grid, int precision) {
  if (grid.empty()) return {};
  unsigned top = *std::max_element(grid.begin(), grid.end());
  return diagnostics(grid, make_bundle(std::max(top, 1U)), precision);
}

TournamentPmf tournament_pmf(const ScoreTable& scores, unsigned n_max,
                             const LambdaEnclosure& lambda, int precision) {
  if (n_max > scores.n_max()) throw DomainError("tournament_pmf: n_max beyond the score table");
  Enclosure damping = exp_enclosure(-lambda.enclosure, precision);
  TournamentPmf out;
  out.n_max = n_max;
  BigInt running = 0;  // sum_{k<=n} S_k 4^(n-k)
  for (unsigned n = 0; n <= n_max; ++n) {
    BigInt four_n = pow4(n);
    BigRat alpha = ratio(scores[n], four_n);
    alpha.canonicalize();
    out.probs.push_back(damping * rat_to_enclosure(alpha, precision));
    running = running * 4 + scores[n];
    BigRat partial = ratio(running, four_n);
    partial.canonicalize();
    out.partial_sums.push_back(damping * rat_to_enclosure(partial, precision));
    if (out.partial_sums.back().lo() >= 1) {
      throw ConsistencyError("tournament distribution partial sum certified >= 1 at n=" +
                             std::to_string(n));
    }
  }
  return out;
}

NbLimitLaw::NbLimitLaw(const Enclosure& lambda, int precision)
    : precision_(precision),
      p_(exp_enclosure(-lambda, precision)),
      q_(integer(1, precision) - p_),
      p_squared_(exp_enclosure(integer(-2, 0) * lambda, precision)) {}

Enclosure NbLimitLaw::pmf(unsigned m) const {
  if (m < 1) throw DomainError("nb pmf requires m >= 1");
  return integer(m, precision_) * pow(q_, m - 1) * p_squared_;
}

Enclosure NbLimitLaw::tail(unsigned m) const {
  return pow(q_, m) * (integer(1, precision_) + integer(m, precision_) * p_);
}

Enclosure nb_pmf(unsigned m, const Enclosure& lambda, int precision) {
  return NbLimitLaw(lambda, precision).pmf(m);
}

Enclosure nb_pmf(unsigned m, const LambdaEnclosure& lambda, int precision) {
  return nb_pmf(m, lambda.enclosure, precision);
}

BigRat total_variation(const std::map<unsigned, BigRat>& a, const std::map<unsigned, BigRat>& b) {
  BigRat sum = 0;
  for (const auto& [m, p] : a) {
    auto it = b.find(m);
    sum += abs(p - (it == b.end() ? BigRat(0) : it->second));
  }
  for (const auto& [m, p] : b) {
    if (!a.contains(m)) sum += abs(p);
  }
  return sum / 2;
}

NbDistance nb_limit_distance(const SubscorePmf& pmf, const NbLimitLaw& law) {
  std::map<unsigned, BigRat> limit;
  unsigned m_max = 0;
  for (const auto& [m, p] : pmf.probs) {
    limit.emplace(m, law.pmf(m).midpoint());
    m_max = std::max(m_max, m);
  }
  NbDistance out;
  out.n = pmf.n;
  out.m_max = m_max;
  BigRat limit_tail = law.tail(m_max).midpoint();
  // Mass beyond m_max adds between |t_exact - t_limit| / 2 and
  // (t_exact + t_limit) / 2 to the distance.
  out.distance = total_variation(pmf.probs, limit) + abs(pmf.tail_mass - limit_tail) / 2;
  out.truncation_slack = std::min(pmf.tail_mass, limit_tail);
  return out;
}

NbDistance nb_limit_distance(unsigned n, const LambdaEnclosure& lambda, int precision) {
  if (n < 1) throw DomainError("nb_limit_distance requires n >= 1");
  ScoreTable scores = count_scores(n);
  SubscoreTable table = subscore_counts(scores, std::min(n, kDefaultPmfMMax));
  return nb_limit_distance(subscore_pmf(n, table, scores[n]),
                           NbLimitLaw(lambda.enclosure, precision));
}

BigRat CompoundPoissonReport::max_deviation(unsigned upto) const {
  BigRat worst = 0;
  for (unsigned j = 0; j <= upto && j < nb_deviation.size(); ++j) {
    worst = std::max(worst, nb_deviation[j]);
  }
  for (unsigned n = 0; n <= upto && n < tournament_deviation.size(); ++n) {
    worst = std::max(worst, tournament_deviation[n]);
  }
  return worst;
}

CompoundPoissonReport compound_poisson_check(const LambdaEnclosure& lambda, unsigned truncation,
                                             int precision) {
  if (truncation < 10) throw DomainError("compound_poisson_check requires truncation >= 10");
  const std::size_t length = truncation + 1;
  Enclosure lam = midpoint_point(lambda.enclosure);
  NbLimitLaw law(lam, precision);
  Enclosure p = exp_enclosure(-lam, precision);
  Enclosure q = integer(1, precision) - p;

  CompoundPoissonReport report;
  report.truncation = truncation;

  // With jump weights r f_k = 2 x^k / k the compound sum factors as
  //   g_j = g_0 x^j sum_{M<=T} 2^M [y^j] L(y)^M / M!,  L(y) = sum_k y^k / k,
  // where (x, g_0) = (q, e^-2l) for the logarithmic law with rate 2 lambda and
  // (e^-l, (1 - e^-l)^2) for the printed parameterization.
  std::vector<BigRat> log_coeffs(length, BigRat(0));
  for (unsigned k = 1; k < length; ++k) log_coeffs[k] = ratio(1, k);
  ExactSeries log_series(log_coeffs);
  std::vector<BigRat> weight(length, BigRat(0));
  weight[0] = 1;
  {
    ExactSeries power = ExactSeries::zeros(length);
    power[0] = 1;
    BigRat scale = 1;  // 2^M / M!
    for (unsigned m = 1; m <= truncation; ++m) {
      power = convolve(power, log_series, length);
      scale = scale * 2 / m;
      for (unsigned j = 0; j < length; ++j) weight[j] += scale * power[j];
    }
  }
  Enclosure printed_base = (integer(1, precision) - p) * (integer(1, precision) - p);
  Enclosure p_squared = exp_enclosure(integer(-2, 0) * lam, precision);
  for (unsigned j = 0; j < length; ++j) {
    Enclosure w = rat_to_enclosure(weight[j], precision);
    Enclosure target = law.pmf(j + 1);
    Enclosure log_law = w * pow(q, j) * p_squared;
    Enclosure printed = w * pow(p, j) * printed_base;
    report.nb_deviation.push_back(abs_difference(log_law, target));
    report.printed_deviation.push_back(abs_difference(printed, target));
  }

  // Rate lambda with jumps beta_k / lambda: lambda^M f^{*M} = beta^{*M}, so
  //   h_n = e^-l sum_{M<=T} beta^{*M}_n / M!.
  EgzTable egz = egz_table(truncation);
  ScoreTable scores = count_scores(egz, truncation);
  std::vector<BigRat> beta(length, BigRat(0));
  for (unsigned k = 1; k < length; ++k) {
    beta[k] = ratio(egz[k], pow4(k) * k);
    beta[k].canonicalize();
  }
  ExactSeries beta_series(beta);
  std::vector<BigRat> compound(length, BigRat(0));
  compound[0] = 1;
  {
    ExactSeries power = ExactSeries::zeros(length);
    power[0] = 1;
    BigRat inv_factorial = 1;
    for (unsigned m = 1; m <= truncation; ++m) {
      power = convolve(power, beta_series, length);
      inv_factorial /= m;
      for (unsigned n = 0; n < length; ++n) {
        if (power[n] != 0) compound[n] += inv_factorial * power[n];
      }
    }
  }
  for (unsigned n = 0; n < length; ++n) {
    Enclosure reconstructed = p * rat_to_enclosure(compound[n], precision);
    BigRat alpha = ratio(scores[n], pow4(n));
    alpha.canonicalize();
    Enclosure direct = p * rat_to_enclosure(alpha, precision);
    report.tournament_deviation.push_back(abs_difference(reconstructed, direct));
  }
  return report;
}

}  // namespace scoreseq
