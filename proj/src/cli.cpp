#include "scoreseq/cli.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scoreseq/asympt.hpp"
#include "scoreseq/cache.hpp"
#include "scoreseq/decomp.hpp"
#include "scoreseq/egz.hpp"
#include "scoreseq/errors.hpp"
#include "scoreseq/oracle.hpp"
#include "scoreseq/scores.hpp"
#include "scoreseq/verify.hpp"

namespace scoreseq {

namespace {

constexpr int kDefaultOutputPrecision = 12;
constexpr unsigned kDefaultTerms = 100;

// Thrown for flag combinations CLI11 cannot express; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  nlohmann::json meta = nlohmann::json::object();
};

bool is_index_column(const std::string& name) { return name == "n" || name == "m" || name == "terms"; }

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

void emit(const Table& table, const std::string& format, const std::string& command,
          std::ostream& out) {
  if (format == "json") {
    nlohmann::json doc = {{"command", command}, {"columns", table.columns}};
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
      nlohmann::json obj = nlohmann::json::object();
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        const auto& name = table.columns[c];
        if (is_index_column(name) && all_digits(row[c])) {
          obj[name] = std::stoull(row[c]);
        } else {
          obj[name] = row[c];
        }
      }
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    for (const auto& [key, value] : table.meta.items()) doc[key] = value;
    out << doc.dump(2) << "\n";
    return;
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << "\n";
  }
}

// Exact tables behind the CLI, optionally backed by the on-disk cache.
class Sequences {
 public:
  explicit Sequences(std::optional<std::filesystem::path> dir) : cache_(std::move(dir)) {}

  std::vector<BigInt> egz(unsigned n_max) {
    return cache_.get(SequenceKind::egz, n_max, [](unsigned n) { return egz_table(n).values(); });
  }

  std::vector<BigInt> scores(unsigned n_max) {
    return cache_.get(SequenceKind::scores, n_max, [this](unsigned n) {
      if (n == 0) return std::vector<BigInt>{BigInt(1)};
      return count_scores(EgzTable(egz(n)), n).values();
    });
  }

  std::vector<BigInt> strong(unsigned n_max) {
    return cache_.get(SequenceKind::strong, n_max, [this](unsigned n) {
      return strong_series(ScoreTable(scores(n))).to_integers();
    });
  }

  SequenceBundle bundle(unsigned n_max) {
    return SequenceBundle{EgzTable(egz(n_max)), ScoreTable(scores(n_max)), strong(n_max)};
  }

 private:
  SequenceCache cache_;
};

struct Common {
  std::string format = "csv";
  std::optional<std::string> cache_dir;
  int precision = kDefaultOutputPrecision;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option_function<std::string>(
      "--cache-dir", [&common](const std::string& dir) { common.cache_dir = dir; },
      "Directory for cached sequences (overrides SCORESEQ_CACHE_DIR)");
  cmd->add_option("--precision", common.precision, "Decimal digits in printed values")
      ->check(CLI::Range(1, kMaxConstantPrecision));
}

int working_precision(const Common& common) {
  return std::max(common.precision, kDefaultPrecision);
}

std::string ratio_string(const BigRat& q, int digits) { return to_decimal(q, digits); }

LambdaEnclosure lambda_for(Sequences& seq, unsigned terms, int precision) {
  if (terms < 10) throw UsageError("--terms must be at least 10");
  return lambda_enclosure(EgzTable(seq.egz(terms)), terms, precision);
}

std::vector<unsigned> parse_grid(const std::string& text) {
  std::vector<unsigned> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!all_digits(item)) throw UsageError("--grid expects comma-separated positive integers");
    unsigned long v = std::stoul(item);
    if (v < 1 || v > 100000) throw UsageError("--grid values must lie in [1, 100000]");
    grid.push_back(static_cast<unsigned>(v));
  }
  if (grid.empty()) throw UsageError("--grid is empty");
  return grid;
}

void run_egz(const Common& common, std::optional<unsigned> n, std::optional<unsigned> upto,
             std::ostream& out) {
  if (n.has_value() == upto.has_value()) throw UsageError("egz needs exactly one of --n, --upto");
  Sequences seq(resolve_cache_dir(common.cache_dir));
  if (n) {
    if (*n < 1) throw UsageError("--n must be at least 1");
    auto values = seq.egz(*n);
    if (common.format == "json") {
      out << nlohmann::json{{"n", *n}, {"N_n", values.back().get_str()}}.dump(2) << "\n";
    } else {
      out << values.back().get_str() << "\n";
    }
    return;
  }
  if (*upto < 1) throw UsageError("--upto must be at least 1");
  auto values = seq.egz(*upto);
  Table table{{"n", "N_n"}, {}, {}};
  for (unsigned k = 1; k <= *upto; ++k) table.rows.push_back({std::to_string(k), values[k - 1].get_str()});
  emit(table, common.format, "egz", out);
}

void run_scores(const Common& common, std::optional<unsigned> n, std::optional<unsigned> upto,
                std::ostream& out) {
  if (n.has_value() == upto.has_value()) throw UsageError("scores needs exactly one of --n, --upto");
  Sequences seq(resolve_cache_dir(common.cache_dir));
  if (n) {
    auto values = seq.scores(*n);
    if (common.format == "json") {
      out << nlohmann::json{{"n", *n}, {"S_n", values.back().get_str()}}.dump(2) << "\n";
    } else {
      out << values.back().get_str() << "\n";
    }
    return;
  }
  auto values = seq.scores(*upto);
  Table table{{"n", "S_n"}, {}, {}};
  for (unsigned k = 0; k <= *upto; ++k) table.rows.push_back({std::to_string(k), values[k].get_str()});
  emit(table, common.format, "scores", out);
}

// Rows m, S_{n,m}, P(I_n = m) and, optionally, the limit law.
Table subscore_table(Sequences& seq, const Common& common, unsigned n, unsigned m_max,
                     std::optional<unsigned> limit_terms) {
  if (n < 1) throw UsageError("--n must be at least 1");
  if (m_max < 1) throw UsageError("--m-max must be at least 1");
  ScoreTable scores(seq.scores(n));
  SubscoreTable counts = subscore_counts(scores, std::min(n, m_max));
  SubscorePmf pmf = subscore_pmf(n, counts, scores[n]);

  Table table{{"m", "S_nm", "prob"}, {}, {}};
  std::optional<NbLimitLaw> law;
  if (limit_terms) {
    table.columns.push_back("nb_lo");
    table.columns.push_back("nb_hi");
    law.emplace(lambda_for(seq, *limit_terms, working_precision(common)).enclosure,
                working_precision(common));
  }
  for (const auto& [m, p] : pmf.probs) {
    std::vector<std::string> row = {std::to_string(m), counts.count(n, m).get_str(),
                                    ratio_string(p, common.precision)};
    if (law) {
      Enclosure nb = law->pmf(m).with_precision(common.precision);
      row.push_back(nb.lo_string());
      row.push_back(nb.hi_string());
    }
    table.rows.push_back(std::move(row));
  }
  if (pmf.tail_mass != 0) {
    std::vector<std::string> row = {"tail", BigRat(scores[n] * pmf.tail_mass).get_num().get_str(),
                                    ratio_string(pmf.tail_mass, common.precision)};
    if (law) {
      Enclosure tail = law->tail(pmf.probs.rbegin()->first).with_precision(common.precision);
      row.push_back(tail.lo_string());
      row.push_back(tail.hi_string());
    }
    table.rows.push_back(std::move(row));
  }
  table.meta["n"] = n;
  table.meta["S_n"] = scores[n].get_str();
  table.meta["tail_mass"] = to_string(pmf.tail_mass);
  table.meta["mean_truncated"] = ratio_string(pmf.mean(), common.precision);
  table.meta["inverse_mean_truncated"] = ratio_string(pmf.inverse_mean(), common.precision);
  if (law) {
    NbDistance d = nb_limit_distance(pmf, *law);
    table.meta["tv_distance"] = ratio_string(d.distance, common.precision);
    table.meta["tv_truncation_slack"] = ratio_string(d.truncation_slack, common.precision);
  }
  return table;
}

void run_lambda(const Common& common, unsigned terms, std::ostream& out) {
  Sequences seq(resolve_cache_dir(common.cache_dir));
  LambdaEnclosure lam = lambda_for(seq, terms, working_precision(common));
  Enclosure shown = lam.enclosure.with_precision(common.precision);
  Table table{{"terms", "partial_sum", "lambda_lo", "lambda_hi", "width"}, {}, {}};
  table.rows.push_back({std::to_string(terms), ratio_string(lam.partial_sum, common.precision),
                        shown.lo_string(), shown.hi_string(),
                        to_decimal(shown.width(), common.precision)});
  emit(table, common.format, "lambda", out);
}

void run_constants(const Common& common, unsigned terms, std::ostream& out) {
  Sequences seq(resolve_cache_dir(common.cache_dir));
  const int working = std::min(working_precision(common), kMaxConstantPrecision);
  ConstantSet c = constants(lambda_for(seq, terms, working), working);
  const std::vector<std::pair<std::string, const Enclosure*>> entries = {
      {"e_lambda", &c.e_lambda},         {"takacs", &c.takacs},
      {"inv_e_lambda", &c.inv_e_lambda}, {"strong_frac", &c.strong_frac},
      {"strong_takacs", &c.strong_takacs}, {"nb_mean", &c.nb_mean},
      {"nb_variance", &c.nb_variance}};
  Table table{{"name", "lo", "hi", "width"}, {}, {}};
  for (const auto& [name, e] : entries) {
    Enclosure shown = e->with_precision(common.precision);
    table.rows.push_back({name, shown.lo_string(), shown.hi_string(),
                          to_decimal(shown.width(), common.precision)});
  }
  table.meta["terms"] = terms;
  emit(table, common.format, "constants", out);
}

void run_converge(const Common& common, const std::string& grid_text, unsigned terms,
                  std::ostream& out) {
  std::vector<unsigned> grid = parse_grid(grid_text);
  Sequences seq(resolve_cache_dir(common.cache_dir));
  const int working = std::min(working_precision(common), kMaxConstantPrecision);
  unsigned top = *std::max_element(grid.begin(), grid.end());
  LambdaEnclosure lam = lambda_for(seq, terms, working);
  ConstantSet c = constants(lam, working);
  auto rows = diagnostics(grid, seq.bundle(top), working);

  Table table{{"n"}, {}, {}};
  const std::vector<std::string> names = {"takacs", "strong_takacs", "strong_ratio", "inv_mean",
                                          "beta_conv", "partial_gf"};
  for (const auto& name : names) {
    table.columns.push_back(name + "_lo");
    table.columns.push_back(name + "_hi");
    table.columns.push_back(name + "_err");
  }
  for (const auto& r : rows) {
    const std::vector<std::pair<const Enclosure*, const Enclosure*>> pairs = {
        {&r.takacs_ratio, &c.takacs},        {&r.strong_takacs_ratio, &c.strong_takacs},
        {&r.strong_ratio, &c.strong_frac},   {&r.inv_mean, &c.inv_e_lambda},
        {&r.beta_conv_ratio, &lam.enclosure}, {&r.partial_gf, &c.e_lambda}};
    std::vector<std::string> row = {std::to_string(r.n)};
    for (const auto& [value, limit] : pairs) {
      Enclosure shown = value->with_precision(common.precision);
      row.push_back(shown.lo_string());
      row.push_back(shown.hi_string());
      row.push_back(to_decimal(abs(value->midpoint() - limit->midpoint()), common.precision));
    }
    table.rows.push_back(std::move(row));
  }
  table.meta["terms"] = terms;
  emit(table, common.format, "converge", out);
}

void run_sample(const Common& common, unsigned n, unsigned count, std::uint64_t seed,
                std::ostream& out) {
  if (n < 1 || n > 40) throw UsageError("--n must lie in [1, 40]");
  auto samples = sample_uniform(n, seed, count);
  if (common.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& s : samples) list.push_back(s.scores());
    out << nlohmann::json{{"n", n}, {"seed", seed}, {"samples", list}}.dump(2) << "\n";
    return;
  }
  for (const auto& s : samples) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << "\n";
  }
}

int run_verify(unsigned max_oracle, std::ostream& out) {
  if (max_oracle < 1 || max_oracle > kMaxOracle) throw UsageError("--max-oracle must lie in [1, 13]");
  bool ok = true;
  for (const auto& r : run_verification(max_oracle)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) out << ": " << r.detail;
    out << "\n";
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitVerification;
}

void run_export(const Common& common, unsigned upto, unsigned terms, std::ostream& out) {
  Sequences seq(resolve_cache_dir(common.cache_dir));
  unsigned n_max = std::max(upto, 1U);
  auto egz = seq.egz(n_max);
  ScoreTable scores(seq.scores(n_max));
  auto strong = seq.strong(n_max);
  const int working = std::min(working_precision(common), kMaxConstantPrecision);
  TournamentPmf td = tournament_pmf(scores, upto, lambda_for(seq, terms, working), working);
  Table table{{"n", "N_n", "S_n", "S_n1", "p_lo", "p_hi"}, {}, {}};
  for (unsigned n = 0; n <= upto; ++n) {
    Enclosure p = td.probs[n].with_precision(common.precision);
    table.rows.push_back({std::to_string(n), n == 0 ? "0" : egz[n - 1].get_str(),
                          scores[n].get_str(), strong[n].get_str(), p.lo_string(), p.hi_string()});
  }
  table.meta["terms"] = terms;
  emit(table, common.format, "export", out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tournament score-sequence counts and certified limit constants", "scoreseq"};
  app.require_subcommand(1);

  Common common;
  unsigned n_value = 0;
  unsigned upto_value = 0;
  unsigned terms = kDefaultTerms;
  unsigned m_max = kDefaultPmfMMax;
  unsigned count = 1;
  std::uint64_t seed = 0;
  unsigned max_oracle = 12;
  std::string grid = "250,500,1000,2000";
  bool limit = false;

  auto add_n = [&](CLI::App* cmd) { return cmd->add_option("--n", n_value, "Number of teams"); };
  auto add_upto = [&](CLI::App* cmd) {
    return cmd->add_option("--upto", upto_value, "Largest n in the table");
  };
  auto add_terms = [&](CLI::App* cmd) {
    return cmd->add_option("--terms", terms, "Exact terms in the lambda partial sum (>= 10)");
  };

  auto* egz = app.add_subcommand("egz", "Erdos-Ginzburg-Ziv numbers N_n");
  auto* egz_n = add_n(egz);
  auto* egz_upto = add_upto(egz);
  add_common(egz, common);

  auto* scores = app.add_subcommand("scores", "Score sequence counts S_n");
  auto* scores_n = add_n(scores);
  auto* scores_upto = add_upto(scores);
  add_common(scores, common);

  auto* decomp = app.add_subcommand("decomp", "Counts S_{n,m} by irreducible subscores");
  add_n(decomp)->required();
  decomp->add_option("--m-max", m_max, "Largest m tabulated");
  add_common(decomp, common);

  auto* lambda = app.add_subcommand("lambda", "Certified enclosure of lambda");
  add_terms(lambda);
  add_common(lambda, common);

  auto* consts = app.add_subcommand("constants", "Certified limit constants");
  add_terms(consts);
  add_common(consts, common);

  auto* converge = app.add_subcommand("converge", "Convergence diagnostics on a grid of n");
  converge->add_option("--grid", grid, "Comma-separated n values");
  add_terms(converge);
  add_common(converge, common);

  auto* dist = app.add_subcommand("dist", "Exact law of the irreducible subscore count");
  add_n(dist)->required();
  dist->add_option("--m-max", m_max, "Largest m tabulated");
  dist->add_flag("--limit", limit, "Add the negative binomial limit columns");
  add_terms(dist);
  add_common(dist, common);

  auto* sample = app.add_subcommand("sample", "Uniform random score sequences");
  add_n(sample)->required();
  sample->add_option("--count", count, "Number of samples");
  sample->add_option("--seed", seed, "Generator seed");
  add_common(sample, common);

  auto* verify = app.add_subcommand("verify", "Run the identity and oracle suite");
  verify->add_option("--max-oracle", max_oracle, "Largest n for brute-force oracles (<= 13)");

  auto* exp = app.add_subcommand("export", "Table of N_n, S_n, S_{n,1} and the tournament distribution");
  add_upto(exp)->required();
  add_terms(exp);
  add_common(exp, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto optional_of = [](CLI::Option* opt, unsigned v) {
    return opt->count() > 0 ? std::optional<unsigned>(v) : std::nullopt;
  };

  try {
    if (*egz) {
      run_egz(common, optional_of(egz_n, n_value), optional_of(egz_upto, upto_value), out);
    } else if (*scores) {
      run_scores(common, optional_of(scores_n, n_value), optional_of(scores_upto, upto_value), out);
    } else if (*decomp) {
      Sequences seq(resolve_cache_dir(common.cache_dir));
      emit(subscore_table(seq, common, n_value, m_max, std::nullopt), common.format, "decomp", out);
    } else if (*lambda) {
      run_lambda(common, terms, out);
    } else if (*consts) {
      run_constants(common, terms, out);
    } else if (*converge) {
      run_converge(common, grid, terms, out);
    } else if (*dist) {
      Sequences seq(resolve_cache_dir(common.cache_dir));
      emit(subscore_table(seq, common, n_value, m_max,
                          limit ? std::optional<unsigned>(terms) : std::nullopt),
           common.format, "dist", out);
    } else if (*sample) {
      run_sample(common, n_value, count, seed, out);
    } else if (*verify) {
      return run_verify(max_oracle, out);
    } else if (*exp) {
      run_export(common, upto_value, terms, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace scoreseq
