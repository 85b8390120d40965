#include <doctest.h>

#include <vector>

#include "scoreseq/asympt.hpp"
#include "scoreseq/errors.hpp"

using namespace scoreseq;

namespace {

const LambdaEnclosure& lambda100() {
  static const LambdaEnclosure lam = lambda_enclosure(100);
  return lam;
}

const LambdaEnclosure& lambda1000() {
  static const LambdaEnclosure lam = lambda_enclosure(1000);
  return lam;
}

}  // namespace

TEST_CASE("lambda enclosure at 100 terms") {
  const auto& lam = lambda100();
  CHECK(to_decimal(lam.partial_sum, 10) == "0.3300510246");
  CHECK(lam.enclosure.lo() >= parse_decimal("0.330235"));
  CHECK(lam.enclosure.hi() <= parse_decimal("0.330239"));
  CHECK(lam.tail_lo.lo() <= lam.tail_hi.hi());

  // partial sum by direct summation
  BigRat direct = 0;
  EgzTable egz = egz_table(100);
  for (unsigned k = 1; k <= 100; ++k) direct += ratio(egz[k], pow4(k) * k);
  CHECK(direct == lam.partial_sum);
}

TEST_CASE("lambda enclosures nest") {
  for (TailRule rule : {TailRule::integral, TailRule::midpoint}) {
    Enclosure prev = lambda_enclosure(10, kDefaultPrecision, rule).enclosure;
    for (unsigned terms : {50U, 100U, 1000U}) {
      Enclosure next = lambda_enclosure(terms, kDefaultPrecision, rule).enclosure;
      CHECK(prev.contains(next));
      CHECK(next.width() < prev.width());
      prev = next;
    }
  }
  // the sharper tail rule sits inside the plain one
  CHECK(lambda_enclosure(100, 30, TailRule::integral).enclosure.contains(lambda100().enclosure));
  CHECK_THROWS_AS(lambda_enclosure(9), DomainError);
}

TEST_CASE("constants") {
  ConstantSet c = constants(lambda100());
  CHECK(c.takacs.rounds_to("0.392"));
  CHECK(c.inv_e_lambda.truncates_to("0.718"));
  CHECK(c.strong_takacs.truncates_to("0.202"));
  CHECK(c.nb_mean.truncates_to("1.782"));
  CHECK(c.nb_variance.truncates_to("1.088"));
  CHECK(c.strong_frac.lo() >= parse_decimal("0.5160"));
  CHECK(c.strong_frac.hi() <= parse_decimal("0.5172"));
  CHECK(c.strong_frac.truncates_to("0.516"));

  CHECK((c.inv_e_lambda * c.e_lambda).contains(BigRat(1)));
  CHECK((c.inv_e_lambda * c.inv_e_lambda).contains(c.strong_frac));
  // e^lambda = takacs * 2 sqrt(pi)
  CHECK((c.takacs * Enclosure::exact(2, 30) * sqrt_pi_enclosure(30)).contains(c.e_lambda.midpoint()));
  // nb_mean = 2 e^lambda - 1, nb_variance = 2 (e^lambda - 1) e^lambda
  CHECK(c.nb_mean.contains(2 * c.e_lambda.midpoint() - 1));
  BigRat e = c.e_lambda.midpoint();
  CHECK(c.nb_variance.contains(2 * (e - 1) * e));
}

TEST_CASE("diagnostics at small n") {
  std::vector<unsigned> grid = {1, 6};
  auto rows = diagnostics(grid);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].takacs_ratio.contains(ratio(1, 4)));
  CHECK(rows[1].takacs_ratio.with_precision(4).contains(parse_decimal("0.4736")));
  CHECK(rows[1].takacs_ratio.truncates_to("0.473631805733466"));
  CHECK(rows[1].inv_mean.contains(ratio(76, 132)));
  CHECK(rows[1].strong_ratio.contains(ratio(7, 22)));
  // beta_1 = 1/4, beta_2 = 1/32; beta^{*2}_2 = 1/16 -> ratio 1
  std::vector<unsigned> two = {2};
  CHECK(diagnostics(two)[0].beta_conv_ratio.contains(BigRat(1)));
  // sum_{k<=6} S_k / 4^k
  BigRat gf = 0;
  std::vector<long> s = {1, 1, 1, 2, 4, 9, 22};
  for (unsigned k = 0; k <= 6; ++k) gf += ratio(s[k], pow4(k));
  CHECK(rows[1].partial_gf.contains(gf));
}

TEST_CASE("diagnostics converge") {
  std::vector<unsigned> grid = {250, 500, 1000, 2000};
  SequenceBundle bundle = make_bundle(2000);
  auto rows = diagnostics(grid, bundle);
  ConstantSet c = constants(lambda1000());
  auto err = [](const Enclosure& v, const Enclosure& limit) -> BigRat {
    return abs(v.midpoint() - limit.midpoint());
  };
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(err(rows[i].takacs_ratio, c.takacs) < err(rows[i - 1].takacs_ratio, c.takacs));
    CHECK(err(rows[i].strong_ratio, c.strong_frac) < err(rows[i - 1].strong_ratio, c.strong_frac));
    CHECK(err(rows[i].inv_mean, c.inv_e_lambda) < err(rows[i - 1].inv_mean, c.inv_e_lambda));
    CHECK(err(rows[i].strong_takacs_ratio, c.strong_takacs) <
          err(rows[i - 1].strong_takacs_ratio, c.strong_takacs));
    CHECK(err(rows[i].beta_conv_ratio, lambda1000().enclosure) <
          err(rows[i - 1].beta_conv_ratio, lambda1000().enclosure));
    CHECK(rows[i].partial_gf.lo() > rows[i - 1].partial_gf.hi());
  }
  CHECK(err(rows[3].partial_gf, c.e_lambda) < ratio(1, 100000));
}

TEST_CASE("tournament distribution") {
  ScoreTable scores = count_scores(2000);
  TournamentPmf pmf = tournament_pmf(scores, 2000, lambda1000());
  ConstantSet c = constants(lambda1000());
  CHECK(pmf.probs[0].contains(c.inv_e_lambda.midpoint()));
  CHECK(pmf.probs[0].truncates_to("0.7187"));
  CHECK((pmf.probs[0] / Enclosure::exact(4, 30)).contains(pmf.probs[1].midpoint()));
  for (unsigned n = 1; n <= 2000; ++n) {
    REQUIRE(pmf.partial_sums[n].lo() > pmf.partial_sums[n - 1].lo());
    REQUIRE(pmf.partial_sums[n].lo() < 1);
  }
  CHECK(abs(pmf.partial_sums[2000].midpoint() - 1) < ratio(1, 100000));
}

TEST_CASE("negative binomial limit law") {
  const auto& lam = lambda1000();
  ConstantSet c = constants(lam);
  CHECK(nb_pmf(1, lam).contains(c.strong_frac.midpoint()));

  Enclosure total = Enclosure::exact(0, 30);
  Enclosure mean = Enclosure::exact(0, 30);
  Enclosure inverse = Enclosure::exact(0, 30);
  for (unsigned m = 1; m <= 200; ++m) {
    Enclosure p = nb_pmf(m, lam);
    total = total + p;
    mean = mean + p * Enclosure::exact(m, 30);
    inverse = inverse + p / Enclosure::exact(m, 30);
  }
  CHECK(abs(total.midpoint() - 1) < ratio(1, pow10(10)));
  CHECK(mean.truncates_to("1.782"));
  // sum_m P(m)/m = e^-lambda
  CHECK(abs(inverse.midpoint() - c.inv_e_lambda.midpoint()) <
        c.inv_e_lambda.width() + inverse.width() + ratio(1, pow10(12)));

  NbLimitLaw law(lam.enclosure);
  Enclosure head = Enclosure::exact(0, 30);
  for (unsigned m = 1; m <= 12; ++m) head = head + law.pmf(m);
  CHECK((head + law.tail(12)).contains(BigRat(1)));
}

TEST_CASE("total variation") {
  std::map<unsigned, BigRat> a = {{1, ratio(1, 2)}, {2, ratio(1, 2)}};
  std::map<unsigned, BigRat> b = {{1, ratio(1, 4)}, {3, ratio(3, 4)}};
  CHECK(total_variation(a, a) == 0);
  CHECK(total_variation(a, b) == ratio(3, 4));
}

TEST_CASE("distance to the limit law decreases") {
  const auto& lam = lambda1000();
  NbDistance d6 = nb_limit_distance(6, lam);
  CHECK(d6.distance > 0);
  CHECK(d6.distance < 1);
  NbDistance d100 = nb_limit_distance(100, lam);
  NbDistance d300 = nb_limit_distance(300, lam);
  NbDistance d1000 = nb_limit_distance(1000, lam);
  CHECK(d300.distance < d100.distance);
  CHECK(d1000.distance < d300.distance);
  CHECK(d1000.distance + d1000.truncation_slack < ratio(5, 100));
  CHECK(d1000.truncation_slack < ratio(1, 1000000));
}

TEST_CASE("compound Poisson reconstructions") {
  CompoundPoissonReport r = compound_poisson_check(lambda100(), 60);
  CHECK(r.tournament_deviation[0] < ratio(1, pow10(30)));
  CHECK(r.max_deviation(30) < ratio(1, pow10(8)));
  for (unsigned j = 0; j <= 30; ++j) {
    REQUIRE(r.nb_deviation[j] < ratio(1, pow10(8)));
    REQUIRE(r.tournament_deviation[j] < ratio(1, pow10(8)));
  }
  // the printed parameterization is a different distribution
  CHECK(r.printed_deviation[0] > ratio(1, 100));
  CHECK_THROWS_AS(compound_poisson_check(lambda100(), 9), DomainError);
}
