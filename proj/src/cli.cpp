#include "riffle/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "riffle/gsr.hpp"
#include "riffle/interleave.hpp"
#include "riffle/ladder.hpp"
#include "riffle/montecarlo.hpp"
#include "riffle/permutation.hpp"
#include "riffle/rational.hpp"
#include "riffle/rng.hpp"
#include "riffle/strategy.hpp"
#include "riffle/verify.hpp"

namespace riffle::cli {

namespace {

using nlohmann::json;

/// Raised for user-facing input problems; maps to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, csv, json };

json tagged(const Rational& value) { return {{"mode", "rational"}, {"value", to_string(value)}}; }
json tagged(double value) { return {{"mode", "float"}, {"value", round_to_12_digits(value)}}; }

json envelope(const std::string& command, json parameters, NumericMode mode, json results) {
  return {
      {"schema_version", kSchemaVersion},
      {"artifact_version", kArtifactVersion},
      {"command", command},
      {"parameters", std::move(parameters)},
      {"mode", to_string(mode)},
      {"results", std::move(results)},
  };
}

void emit(std::ostream& out, const json& document) { out << document.dump(2) << '\n'; }

Format pick_format(bool csv, bool as_json) {
  if (csv && as_json) throw ValidationError("choose at most one of --csv and --json");
  if (csv) return Format::csv;
  if (as_json) return Format::json;
  return Format::text;
}

// ---------------------------------------------------------------------------

struct ExactGOptions {
  int n = 0;
  std::string mode = "rational";
  bool csv = false;
  bool json = false;
};

void exact_g_command(const ExactGOptions& o, std::ostream& out) {
  const NumericMode mode = parse_numeric_mode(o.mode);
  const Format format = pick_format(o.csv, o.json);
  if (o.n < 1) throw ValidationError("--n must be at least 1");
  if (mode == NumericMode::rational && o.n > kMaxExactLadder) {
    throw ValidationError("rational mode supports --n up to " + std::to_string(kMaxExactLadder) +
                          "; use --mode float for larger decks");
  }
  const double target = asymptotic_target(o.n);
  std::optional<Rational> exact;
  double g = 0.0;
  if (mode == NumericMode::rational) {
    exact = exact_g(o.n);
    g = to_double(*exact);
  } else {
    g = float_g(o.n);
  }
  const double error = g - target;
  const std::string g_text = exact ? to_string(*exact) : format_float(g);

  switch (format) {
    case Format::text:
      out << "G(" << o.n << ") = " << g_text << '\n'
          << "target = " << format_float(target) << '\n'
          << "error = " << format_float(error) << '\n';
      break;
    case Format::csv:
      out << "n,G,target,error\n" << o.n << ',' << g_text << ',' << format_float(target) << ',' << format_float(error) << '\n';
      break;
    case Format::json:
      emit(out, envelope("exact-g", {{"n", o.n}, {"mode", to_string(mode)}}, mode,
                         {{"G", exact ? tagged(*exact) : tagged(g)}, {"target", tagged(target)}, {"error", tagged(error)}}));
      break;
  }
}

// ---------------------------------------------------------------------------

struct AsymptoticsOptions {
  int max_n = 0;
  bool csv = false;
  bool json = false;
};

void asymptotics_command(const AsymptoticsOptions& o, std::ostream& out) {
  if (o.max_n < 1 || o.max_n > 10000) throw ValidationError("--max-n must lie in 1..10000");
  const Format format = pick_format(o.csv, o.json);
  const auto g = float_g_table(o.max_n);
  if (format == Format::json) {
    json rows = json::array();
    double worst = 0.0;
    for (int n = 1; n <= o.max_n; ++n) {
      const double value = g[static_cast<std::size_t>(n)];
      const double target = asymptotic_target(n);
      worst = std::max(worst, std::abs(value - target));
      rows.push_back({{"n", n},
                      {"G", round_to_12_digits(value)},
                      {"target", round_to_12_digits(target)},
                      {"error", round_to_12_digits(value - target)}});
    }
    emit(out, envelope("asymptotics", {{"max_n", o.max_n}}, NumericMode::floating,
                       {{"rows", rows}, {"max_abs_error", tagged(worst)}}));
    return;
  }
  out << "n,G,target,error\n";
  for (int n = 1; n <= o.max_n; ++n) {
    const double value = g[static_cast<std::size_t>(n)];
    const double target = asymptotic_target(n);
    out << n << ',' << format_float(value) << ',' << format_float(target) << ',' << format_float(value - target) << '\n';
  }
}

// ---------------------------------------------------------------------------

struct PlayOptions {
  int n = 0;
  std::string perm;
  std::optional<std::uint64_t> seed;
  std::string tie_break = "low";
  std::string strategy = "riffle";
  bool json = false;
};

void play_command(const PlayOptions& o, std::ostream& out) {
  if (o.perm.empty() == !o.seed.has_value()) throw ValidationError("give exactly one of --perm and --seed");
  if (o.tie_break != "low" && o.tie_break != "high") throw ValidationError("--tie-break must be low or high");
  std::optional<Permutation> truth;
  if (!o.perm.empty()) {
    truth = Permutation::parse(o.perm);
    if (o.n != 0 && o.n != truth->size()) {
      throw ValidationError("--n " + std::to_string(o.n) + " does not match the " + std::to_string(truth->size()) +
                            " cards in --perm");
    }
  } else {
    if (o.n < 1) throw ValidationError("--seed needs --n >= 1");
    Rng rng = substream(*o.seed, 0);
    truth = word_to_permutation(sample_uniform_word(o.n, rng));
  }
  const int rs = rising_sequence_count(*truth);
  if (rs > 2) {
    throw ValidationError("permutation " + truth->to_string() + " has " + std::to_string(rs) +
                          " rising sequences; one riffle shuffle produces at most 2");
  }
  std::unique_ptr<Strategy> strategy;
  if (o.strategy == "riffle") {
    strategy = std::make_unique<RiffleStrategy>(o.tie_break == "low" ? TieBreak::low_pile : TieBreak::high_pile);
  } else if (o.strategy == "greedy-bayes") {
    if (truth->size() > GreedyBayesStrategy::kMaxSize) throw ValidationError("greedy-bayes supports n <= 16");
    strategy = std::make_unique<GreedyBayesStrategy>();
  } else {
    throw ValidationError("--strategy must be riffle or greedy-bayes");
  }

  const auto transcript = play_with_feedback(*strategy, *truth);
  if (o.json) {
    json steps = json::array();
    for (const auto& s : transcript.steps) steps.push_back({{"guess", s.guess}, {"revealed", s.revealed}, {"correct", s.correct}});
    json params = {{"n", truth->size()}, {"strategy", strategy->name()}, {"tie_break", o.tie_break}};
    if (o.seed) params["seed"] = *o.seed;
    emit(out, envelope("play", params, NumericMode::rational,
                       {{"permutation", truth->to_string()}, {"steps", steps}, {"reward", transcript.reward}}));
    return;
  }
  out << "deck: " << truth->to_string() << '\n' << "step,guess,revealed,correct\n";
  for (std::size_t i = 0; i < transcript.steps.size(); ++i) {
    const auto& s = transcript.steps[i];
    out << i + 1 << ',' << s.guess << ',' << s.revealed << ',' << (s.correct ? "yes" : "no") << '\n';
  }
  out << "reward: " << transcript.reward << '\n';
}

// ---------------------------------------------------------------------------

struct SimulateOptions {
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string sampler = "word";
  std::string strategy = "riffle";
  unsigned workers = 0;
  std::string histogram_csv;
};

void simulate_command(const SimulateOptions& o, std::ostream& out) {
  if (o.n < 1) throw ValidationError("--n must be at least 1");
  if (o.trials < 1) throw ValidationError("--trials must be at least 1");
  const SimulationConfig config{o.n, o.trials, o.seed, parse_sampler(o.sampler), parse_strategy(o.strategy)};
  const auto report = run_trials(config, o.workers);
  emit(out, envelope("simulate",
                     {{"n", o.n}, {"trials", o.trials}, {"seed", o.seed}, {"sampler", o.sampler}, {"strategy", o.strategy}},
                     NumericMode::floating, to_json(report)));
  if (!o.histogram_csv.empty()) {
    std::ofstream file(o.histogram_csv);
    if (!file) throw ValidationError("cannot write " + o.histogram_csv);
    write_histogram_csv(file, report);
  }
}

// ---------------------------------------------------------------------------

struct TableFOptions {
  int max = 0;
  bool csv = false;
  bool json = false;
};

void table_f_command(const TableFOptions& o, std::ostream& out) {
  if (o.max < 0 || o.max > 400) throw ValidationError("--max must lie in 0..400");
  const Format format = pick_format(o.csv, o.json);
  const InterleaveRewardTable table(o.max);
  switch (format) {
    case Format::csv:
      out << "a,b,f\n";
      for (int a = 0; a <= o.max; ++a) {
        for (int b = 0; a + b <= o.max; ++b) out << a << ',' << b << ',' << to_string(table(a, b)) << '\n';
      }
      break;
    case Format::json: {
      json rows = json::array();
      for (int a = 0; a <= o.max; ++a) {
        json row = json::array();
        for (int b = 0; a + b <= o.max; ++b) row.push_back(to_string(table(a, b)));
        rows.push_back(row);
      }
      emit(out, envelope("table-f", {{"max", o.max}}, NumericMode::rational, {{"f", rows}}));
      break;
    }
    case Format::text:
      for (int a = 0; a <= o.max; ++a) {
        for (int b = 0; a + b <= o.max; ++b) {
          out << (b ? "\t" : "") << "f(" << a << ',' << b << ")=" << to_string(table(a, b));
        }
        out << '\n';
      }
      break;
  }
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string suite = "paper";
  int max_n = 12;
  bool json = false;
};

int verify_command(const VerifyOptions& o, std::ostream& out) {
  if (o.suite != "paper") throw ValidationError("unknown suite '" + o.suite + "' (available: paper)");
  if (o.max_n < 1 || o.max_n > 16) throw ValidationError("--max-n must lie in 1..16");
  const auto results = run_verification_suite(o.max_n);
  const bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  if (o.json) {
    json checks = json::array();
    for (const auto& r : results) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    emit(out, envelope("verify", {{"suite", o.suite}, {"max_n", o.max_n}}, NumericMode::rational,
                       {{"checks", checks}, {"passed", all}}));
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.passed) out << ": " << r.detail;
      out << '\n';
    }
    out << (all ? "all checks passed" : "verification FAILED") << '\n';
  }
  return all ? kExitOk : kExitValidation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and simulated analysis of guessing a once-riffled deck with complete feedback", "riffle"};
  app.set_version_flag("--version", kArtifactVersion);
  app.set_config("--config", "", "INI/TOML file with default option values (e.g. [exact-g] mode=\"float\")");
  app.require_subcommand(1);

  ExactGOptions exact_g_opts;
  auto* exact_g_cmd = app.add_subcommand("exact-g", "Optimal expected reward G(n), its asymptotic target and the error");
  exact_g_cmd->add_option("--n", exact_g_opts.n, "Deck size")->required();
  exact_g_cmd->add_option("--mode", exact_g_opts.mode, "rational or float")->capture_default_str();
  exact_g_cmd->add_flag("--csv", exact_g_opts.csv, "CSV output");
  exact_g_cmd->add_flag("--json", exact_g_opts.json, "JSON envelope output");

  AsymptoticsOptions asym_opts;
  auto* asym_cmd = app.add_subcommand("asymptotics", "CSV rows n,G,target,error for n = 1..max-n (float mode)");
  asym_cmd->add_option("--max-n", asym_opts.max_n, "Largest deck size (<= 10000)")->required();
  asym_cmd->add_flag("--csv", asym_opts.csv, "CSV output (default)");
  asym_cmd->add_flag("--json", asym_opts.json, "JSON envelope output");

  PlayOptions play_opts;
  auto* play_cmd = app.add_subcommand("play", "Play one game with complete feedback and print the transcript");
  play_cmd->add_option("--n", play_opts.n, "Deck size (required with --seed)");
  play_cmd->add_option("--perm", play_opts.perm, "Deck top to bottom, e.g. \"2,3,1\"");
  play_cmd->add_option("--seed", play_opts.seed, "Shuffle the deck once with this seed");
  play_cmd->add_option("--tie-break", play_opts.tie_break, "low or high pile on equal sizes")->capture_default_str();
  play_cmd->add_option("--strategy", play_opts.strategy, "riffle or greedy-bayes")->capture_default_str();
  play_cmd->add_flag("--json", play_opts.json, "JSON envelope output");

  SimulateOptions sim_opts;
  auto* sim_cmd = app.add_subcommand("simulate", "Seeded Monte Carlo estimate of the expected reward");
  sim_cmd->add_option("--n", sim_opts.n, "Deck size")->required();
  sim_cmd->add_option("--trials", sim_opts.trials, "Number of games")->required();
  sim_cmd->add_option("--seed", sim_opts.seed, "Master seed")->required();
  sim_cmd->add_option("--sampler", sim_opts.sampler, "two-step or word")->capture_default_str();
  sim_cmd->add_option("--strategy", sim_opts.strategy, "riffle, riffle-high-tie or greedy-bayes")->capture_default_str();
  sim_cmd->add_option("--workers", sim_opts.workers, "Worker threads (0 = all cores); never changes the result");
  sim_cmd->add_option("--histogram-csv", sim_opts.histogram_csv, "Also write the reward histogram to this CSV file");

  TableFOptions table_opts;
  auto* table_cmd = app.add_subcommand("table-f", "Triangle of interleaving rewards f(a,b) for a+b <= max");
  table_cmd->add_option("--max", table_opts.max, "Largest a+b")->required();
  table_cmd->add_flag("--csv", table_opts.csv, "CSV output");
  table_cmd->add_flag("--json", table_opts.json, "JSON envelope output");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Replay every closed form and worked example against brute force");
  verify_cmd->add_option("--suite", verify_opts.suite, "Check suite")->capture_default_str();
  verify_cmd->add_option("--max-n", verify_opts.max_n, "Enumeration bound (<= 16)")->capture_default_str();
  verify_cmd->add_flag("--json", verify_opts.json, "JSON envelope output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*exact_g_cmd) exact_g_command(exact_g_opts, out);
    if (*asym_cmd) asymptotics_command(asym_opts, out);
    if (*play_cmd) play_command(play_opts, out);
    if (*sim_cmd) simulate_command(sim_opts, out);
    if (*table_cmd) table_f_command(table_opts, out);
    if (*verify_cmd) return verify_command(verify_opts, out);
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ImpossibleRevealError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace riffle::cli
