#include "scoreseq/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>

#include "scoreseq/asympt.hpp"
#include "scoreseq/decomp.hpp"
#include "scoreseq/egz.hpp"
#include "scoreseq/errors.hpp"
#include "scoreseq/oracle.hpp"
#include "scoreseq/scores.hpp"
#include "scoreseq/series.hpp"

namespace scoreseq {

namespace {

constexpr unsigned kIdentityRange = 200;
constexpr unsigned kBoundsRange = 2000;
constexpr unsigned kCentralRange = 1000;
constexpr unsigned kBijectionRange = 10;
constexpr unsigned kCycleTypeRange = 15;

using Check = std::function<std::optional<std::string>()>;

std::string at(unsigned n) { return " at n=" + std::to_string(n); }

}  // namespace

std::vector<CheckResult> run_verification(unsigned max_oracle) {
  if (max_oracle < 1 || max_oracle > kMaxOracle) {
    throw DomainError("max_oracle must lie in [1, 13]");
  }

  std::vector<std::pair<std::string, Check>> checks;

  checks.emplace_back("egz-divisibility", []() -> std::optional<std::string> {
    for (unsigned n = 1; n <= kIdentityRange; ++n) egz_number(n);
    return std::nullopt;
  });

  checks.emplace_back("egz-divisor-form", []() -> std::optional<std::string> {
    EgzTable table = egz_table(kIdentityRange);
    for (unsigned n = 1; n <= kIdentityRange; ++n) {
      if (table[n] != egz_number(n)) return "divisor-grouped table differs" + at(n);
    }
    return std::nullopt;
  });

  checks.emplace_back("score-recurrence-divisibility", []() -> std::optional<std::string> {
    count_scores(kIdentityRange);
    return std::nullopt;
  });

  checks.emplace_back("log-transform-identity", []() -> std::optional<std::string> {
    EgzTable egz = egz_table(kIdentityRange);
    ExactSeries hat = log_transform(count_scores(egz, kIdentityRange).series());
    for (unsigned n = 1; n <= kIdentityRange; ++n) {
      if (hat[n] != BigRat(egz[n])) return "log transform of S differs from N" + at(n);
    }
    return std::nullopt;
  });

  checks.emplace_back("subscore-identity", []() -> std::optional<std::string> {
    EgzTable egz = egz_table(kIdentityRange);
    SubscoreTable table = subscore_counts(count_scores(egz, kIdentityRange), kIdentityRange);
    for (unsigned n = 1; n <= kIdentityRange; ++n) verify_egz_identity(n, table, egz[n]);
    return std::nullopt;
  });

  checks.emplace_back("oracle-egz", [max_oracle]() -> std::optional<std::string> {
    for (unsigned n = 1; n <= max_oracle; ++n) {
      if (egz_brute_force(n) != egz_number(n)) return "enumeration differs from formula" + at(n);
    }
    return std::nullopt;
  });

  checks.emplace_back("oracle-scores", [max_oracle]() -> std::optional<std::string> {
    ScoreTable scores = count_scores(max_oracle);
    for (unsigned n = 1; n <= max_oracle; ++n) {
      if (BigInt(static_cast<unsigned long>(enumerate_scores(n).size())) != scores[n]) {
        return "enumeration count differs from recurrence" + at(n);
      }
    }
    return std::nullopt;
  });

  checks.emplace_back("oracle-subscores", [max_oracle]() -> std::optional<std::string> {
    SubscoreTable table = subscore_counts(max_oracle, max_oracle);
    for (unsigned n = 1; n <= max_oracle; ++n) {
      auto histogram = count_by_subscores_brute(n);
      for (unsigned m = 1; m <= n; ++m) {
        auto it = histogram.find(m);
        BigInt brute = it == histogram.end() ? BigInt(0) : it->second;
        if (brute != table.count(n, m)) {
          return "S_{n,m} differs from enumeration" + at(n) + " m=" + std::to_string(m);
        }
      }
    }
    return std::nullopt;
  });

  checks.emplace_back("subset-bijection", [max_oracle]() -> std::optional<std::string> {
    for (unsigned n = 1; n <= std::min(max_oracle, kBijectionRange); ++n) {
      std::set<std::set<int>> images;
      for (const auto& s : enumerate_scores(n)) {
        if (!images.insert(score_to_subset(s)).second) return "two sequences share a subset" + at(n);
      }
    }
    return std::nullopt;
  });

  checks.emplace_back("egz-bounds", []() -> std::optional<std::string> {
    EgzTable egz = egz_table(kBoundsRange);
    for (unsigned n = 10; n <= kBoundsRange; ++n) {
      auto bounds = egz_bounds(n);
      BigRat value(egz[n]);
      if (!(bounds.lower.hi() <= value && value <= bounds.upper.lo())) {
        return "N_n outside its bounds" + at(n);
      }
    }
    return std::nullopt;
  });

  checks.emplace_back("central-binomial-bounds", []() -> std::optional<std::string> {
    for (unsigned n = 1; n <= kCentralRange; ++n) {
      auto bounds = central_binomial_bounds(n);
      BigRat value(binomial(2 * n, n));
      if (!(bounds.lower.strictly_below(value) && bounds.upper.strictly_above(value))) {
        return "C(2n, n) outside its bounds" + at(n);
      }
    }
    return std::nullopt;
  });

  checks.emplace_back("lambda-nesting", []() -> std::optional<std::string> {
    EgzTable egz = egz_table(1000);
    for (TailRule rule : {TailRule::integral, TailRule::midpoint}) {
      std::optional<Enclosure> outer;
      for (unsigned terms : {10U, 50U, 100U, 1000U}) {
        Enclosure e = lambda_enclosure(egz, terms, kDefaultPrecision, rule).enclosure;
        if (outer && !outer->contains(e)) return "enclosure not nested at terms=" + std::to_string(terms);
        outer = e;
      }
    }
    return std::nullopt;
  });

  checks.emplace_back("cycle-type-formula", []() -> std::optional<std::string> {
    ScoreTable scores = count_scores(kCycleTypeRange);
    for (unsigned n = 1; n <= kCycleTypeRange; ++n) {
      if (scores_via_cycle_types(n) != scores[n]) return "cycle-type sum differs" + at(n);
    }
    return std::nullopt;
  });

  std::vector<CheckResult> results;
  results.reserve(checks.size());
  for (const auto& [name, check] : checks) {
    CheckResult result{name, false, ""};
    try {
      auto failure = check();
      result.passed = !failure.has_value();
      if (failure) result.detail = *failure;
    } catch (const std::exception& e) {
      result.detail = e.what();
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace scoreseq
