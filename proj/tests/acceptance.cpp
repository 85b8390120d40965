// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fail.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "scoreseq/asympt.hpp"
#include "scoreseq/decomp.hpp"
#include "scoreseq/egz.hpp"
#include "scoreseq/oracle.hpp"
#include "scoreseq/scores.hpp"

using namespace scoreseq;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string dec(const BigRat& q, int digits = 10) { return to_decimal(q, digits); }

bool decreasing(const std::vector<BigRat>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

std::string join(const std::vector<BigRat>& v, int digits) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + dec(x, digits);
  return s;
}

// Shared tables, built once.
struct Fixture {
  SequenceBundle bundle = make_bundle(2000);
  LambdaEnclosure lam100 = lambda_enclosure(bundle.egz, 100);
  LambdaEnclosure lam1000 = lambda_enclosure(bundle.egz, 1000);
  ConstantSet consts = constants(lam1000);
  std::vector<unsigned> grid = {250, 500, 1000, 2000};
  std::vector<DiagnosticRow> rows = diagnostics(grid, bundle);
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

BigRat error_to(const Enclosure& value, const Enclosure& limit) {
  return abs(value.midpoint() - limit.midpoint());
}

int exit_status(const std::string& command) {
  int raw = std::system(command.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Outcome criterion1() {
  auto start = Clock::now();
  for (unsigned n = 1; n <= 12; ++n) {
    if (egz_number(n) != egz_brute_force(n)) return {false, "mismatch at n=" + std::to_string(n)};
  }
  if (egz_number(6) != 76) return {false, "N_6 = " + egz_number(6).get_str()};
  double t = seconds_since(start);
  return {t < 5, "n<=12 agree, N_6=76, " + std::to_string(t) + "s (limit 5s)"};
}

Outcome criterion2() {
  auto start = Clock::now();
  ScoreTable table = count_scores(12);
  for (unsigned n = 1; n <= 12; ++n) {
    if (table[n] != static_cast<unsigned long>(enumerate_scores(n).size())) {
      return {false, "mismatch at n=" + std::to_string(n)};
    }
  }
  if (table[6] != 22) return {false, "S_6 = " + table[6].get_str()};
  double t = seconds_since(start);
  return {t < 30, "n<=12 agree, S_6=22, " + std::to_string(t) + "s (limit 30s)"};
}

Outcome criterion3() {
  SubscoreTable t = subscore_counts(12, 12);
  if (t.row(6) != std::vector<BigInt>{7, 7, 3, 4, 0, 1}) return {false, "row 6 differs"};
  for (unsigned n = 1; n <= 12; ++n) {
    auto hist = count_by_subscores_brute(n);
    for (unsigned m = 1; m <= n; ++m) {
      BigInt brute = hist.count(m) ? hist.at(m) : BigInt(0);
      if (brute != t.count(n, m)) {
        return {false, "S_{n,m} mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m)};
      }
    }
  }
  return {true, "row 6 = (7,7,3,4,0,1); enumeration agrees for n<=12"};
}

Outcome criterion4() {
  const auto& b = fixture().bundle;
  SubscoreTable t = subscore_counts(ScoreTable(std::vector<BigInt>(
                                        b.scores.values().begin(), b.scores.values().begin() + 201)),
                                    200);
  for (unsigned n = 1; n <= 200; ++n) {
    BigRat sum = 0;
    for (unsigned m = 1; m <= n; ++m) sum += ratio(t.count(n, m), m);
    if (sum * n != BigRat(b.egz[n])) return {false, "fails at n=" + std::to_string(n)};
  }
  return {true, "N_n = n sum S_{n,m}/m exactly for n<=200"};
}

Outcome criterion5() {
  const auto& s = fixture().bundle.scores;
  for (unsigned n = 1; n <= 15; ++n) {
    if (scores_via_cycle_types(n) != s[n]) return {false, "differs at n=" + std::to_string(n)};
  }
  return {true, "cycle-type sum equals S_n for n<=15"};
}

Outcome criterion6() {
  auto start = Clock::now();
  LambdaEnclosure lam = lambda_enclosure(100);
  double t = seconds_since(start);
  std::string partial = dec(lam.partial_sum, 10);
  bool ok = partial == "0.3300510246" && lam.enclosure.lo() >= parse_decimal("0.330235") &&
            lam.enclosure.hi() <= parse_decimal("0.330239") && t < 1;
  return {ok, "partial " + partial + ", enclosure [" + lam.enclosure.with_precision(9).lo_string() +
                  ", " + lam.enclosure.with_precision(9).hi_string() + "], " + std::to_string(t) +
                  "s (limit 1s)"};
}

Outcome criterion7() {
  ConstantSet c = constants(fixture().lam100);
  // Printed values are leading digits: every point of the enclosure must
  // begin with them.
  bool ok = c.takacs.rounds_to("0.392") && c.takacs.truncates_to("0.392") &&
            c.inv_e_lambda.truncates_to("0.718") && c.strong_takacs.truncates_to("0.202") &&
            c.nb_mean.truncates_to("1.782") && c.nb_variance.truncates_to("1.088") &&
            c.strong_frac.lo() >= parse_decimal("0.5160") &&
            c.strong_frac.hi() <= parse_decimal("0.5172");
  std::ostringstream d;
  d << "takacs " << c.takacs.with_precision(6).lo_string() << " inv "
    << c.inv_e_lambda.with_precision(6).lo_string() << " strong_takacs "
    << c.strong_takacs.with_precision(6).lo_string() << " nb_mean "
    << c.nb_mean.with_precision(6).lo_string() << " nb_var "
    << c.nb_variance.with_precision(6).lo_string() << " strong_frac ["
    << c.strong_frac.with_precision(6).lo_string() << ", "
    << c.strong_frac.with_precision(6).hi_string() << "]";
  return {ok, d.str()};
}

Outcome criterion8() {
  auto start = Clock::now();
  ScoreTable table = count_scores(2000);
  double t = seconds_since(start);
  const auto& f = fixture();
  if (table.values() != f.bundle.scores.values()) return {false, "S-table rebuild differs"};
  std::vector<BigRat> errs;
  for (const auto& r : f.rows) errs.push_back(error_to(r.takacs_ratio, f.consts.takacs));
  bool ok = decreasing(errs) && errs.back() < ratio(5, 1000) && t < 120;
  return {ok, "errors " + join(errs, 6) + " (< 0.005 at 2000), S-table to 2000 in " +
                  std::to_string(t) + "s (limit 120s)"};
}

Outcome criterion9() {
  const auto& f = fixture();
  std::vector<BigRat> errs;
  std::vector<BigRat> takacs_errs;
  for (const auto& r : f.rows) {
    errs.push_back(error_to(r.strong_ratio, f.consts.strong_frac));
    takacs_errs.push_back(error_to(r.strong_takacs_ratio, f.consts.strong_takacs));
  }
  bool ok = decreasing(errs) && errs.back() < ratio(1, 100) && decreasing(takacs_errs);
  return {ok, "errors " + join(errs, 6) + " (< 0.01 at 2000); strong Takacs errors " +
                  join(takacs_errs, 6)};
}

Outcome criterion10() {
  const auto& f = fixture();
  std::vector<BigRat> errs;
  for (const auto& r : f.rows) errs.push_back(error_to(r.inv_mean, f.consts.inv_e_lambda));
  bool ok = decreasing(errs) && errs.back() < ratio(1, 100);
  return {ok, "errors " + join(errs, 6) + " (< 0.01 at 2000)"};
}

Outcome criterion11() {
  const auto& f = fixture();
  ScoreTable scores(std::vector<BigInt>(f.bundle.scores.values().begin(),
                                        f.bundle.scores.values().begin() + 1001));
  SubscoreTable table = subscore_counts(scores, kDefaultPmfMMax);
  NbLimitLaw law(f.lam1000.enclosure);
  std::vector<BigRat> dist;
  BigRat slack_1000;
  for (unsigned n : {100U, 300U, 1000U}) {
    NbDistance d = nb_limit_distance(subscore_pmf(n, table, scores[n]), law);
    dist.push_back(d.distance);
    slack_1000 = d.truncation_slack;
  }
  bool ok = decreasing(dist) && dist.back() + slack_1000 < ratio(5, 100);
  return {ok, "TV " + join(dist, 6) + " (< 0.05 at 1000, truncation slack " + dec(slack_1000, 12) +
                  ")"};
}

Outcome criterion12() {
  const auto& f = fixture();
  BigRat err = error_to(f.rows.back().partial_gf, f.consts.e_lambda);
  return {err < ratio(1, 100000), "|sum S_n/4^n - e^lambda| = " + dec(err, 9) + " (< 1e-5)"};
}

Outcome criterion13() {
  const auto& f = fixture();
  std::vector<BigRat> errs;
  for (const auto& r : f.rows) errs.push_back(error_to(r.beta_conv_ratio, f.lam1000.enclosure));
  // n = 1000 is the third grid point
  bool ok = decreasing(errs) && errs[2] < ratio(2, 100);
  return {ok, "errors " + join(errs, 6) + " (< 0.02 at 1000)"};
}

Outcome criterion14() {
  const auto& egz = fixture().bundle.egz;
  for (unsigned n = 10; n <= 2000; ++n) {
    EgzBounds b = egz_bounds(n);
    if (!(b.lower.hi() <= BigRat(egz[n]) && BigRat(egz[n]) <= b.upper.lo())) {
      return {false, "EGZ bounds fail at n=" + std::to_string(n)};
    }
  }
  for (unsigned n = 1; n <= 1000; ++n) {
    CentralBinomialBounds b = central_binomial_bounds(n);
    BigRat c(binomial(2 * n, n));
    if (!(b.lower.strictly_below(c) && b.upper.strictly_above(c))) {
      return {false, "central binomial bounds fail at n=" + std::to_string(n)};
    }
  }
  for (TailRule rule : {TailRule::integral, TailRule::midpoint}) {
    Enclosure prev = lambda_enclosure(egz, 10, kDefaultPrecision, rule).enclosure;
    for (unsigned terms : {50U, 100U, 1000U}) {
      Enclosure next = lambda_enclosure(egz, terms, kDefaultPrecision, rule).enclosure;
      if (!prev.contains(next)) return {false, "lambda enclosures not nested"};
      prev = next;
    }
  }
  return {true, "EGZ bounds n in [10,2000], central binomial n in [1,1000], nesting at 10/50/100/1000"};
}

Outcome criterion15() {
  unsigned long total = 0;
  for (unsigned n = 1; n <= 10; ++n) {
    std::set<std::set<int>> images;
    for (const auto& s : enumerate_scores(n)) {
      auto subset = score_to_subset(s);
      long sum = 0;
      for (int v : subset) {
        if (v < 1 || v > static_cast<int>(2 * n - 1)) return {false, "element out of range"};
        sum += v;
      }
      if (subset.size() != n || sum != static_cast<long>(n) * n) return {false, "bad image"};
      if (!images.insert(subset).second) return {false, "collision at n=" + std::to_string(n)};
      ++total;
    }
  }
  return {true, std::to_string(total) + " sequences mapped to distinct n-subsets summing to n^2"};
}

Outcome criterion16() {
  const unsigned n = 10;
  const unsigned samples = 100000;
  SubscorePmf pmf = subscore_pmf(n);
  std::map<unsigned, unsigned> hist;
  for (const auto& s : sample_uniform(n, 20240601, samples)) ++hist[irreducible_count(s)];
  double worst = 0;
  for (const auto& [m, p] : pmf.probs) {
    double prob = p.get_d();
    double expected = samples * prob;
    double sigma = std::sqrt(samples * prob * (1 - prob));
    double observed = hist.count(m) ? hist[m] : 0;
    if (sigma == 0) {
      if (observed != expected) return {false, "impossible bin m=" + std::to_string(m) + " hit"};
      continue;
    }
    worst = std::max(worst, std::abs(observed - expected) / sigma);
  }
  std::ostringstream d;
  d << "max deviation " << worst << " sigma over " << samples << " samples (limit 4)";
  return {worst <= 4, d.str()};
}

Outcome criterion17() {
  int good = exit_status(std::string(SCORESEQ_CLI) + " verify > /dev/null 2>&1");
  int bad = exit_status(std::string(SCORESEQ_MUTANT_CLI) + " verify > /dev/null 2>&1");
  return {good == 0 && bad == 2,
          "correct build exit " + std::to_string(good) + ", sign-flipped build exit " +
              std::to_string(bad)};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {
      criterion1,  criterion2,  criterion3,  criterion4,  criterion5,  criterion6,
      criterion7,  criterion8,  criterion9,  criterion10, criterion11, criterion12,
      criterion13, criterion14, criterion15, criterion16, criterion17};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
