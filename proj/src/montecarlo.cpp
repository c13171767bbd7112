#include "riffle/montecarlo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "riffle/distribution.hpp"
#include "riffle/gsr.hpp"
#include "riffle/rng.hpp"

namespace riffle {

Sampler parse_sampler(const std::string& text) {
  if (text == "two-step") return Sampler::two_step;
  if (text == "word") return Sampler::binary_word;
  throw std::invalid_argument("unknown sampler '" + text + "' (expected two-step or word)");
}

std::string to_string(Sampler sampler) {
  return sampler == Sampler::two_step ? "two-step" : "word";
}

StrategyChoice parse_strategy(const std::string& text) {
  if (text == "riffle") return StrategyChoice::riffle;
  if (text == "riffle-high-tie") return StrategyChoice::riffle_high_tie;
  if (text == "greedy-bayes") return StrategyChoice::greedy_bayes;
  throw std::invalid_argument("unknown strategy '" + text + "' (expected riffle, riffle-high-tie or greedy-bayes)");
}

std::string to_string(StrategyChoice choice) {
  switch (choice) {
    case StrategyChoice::riffle:
      return "riffle";
    case StrategyChoice::riffle_high_tie:
      return "riffle-high-tie";
    case StrategyChoice::greedy_bayes:
      return "greedy-bayes";
  }
  return "unknown";
}

std::unique_ptr<Strategy> make_strategy(StrategyChoice choice) {
  switch (choice) {
    case StrategyChoice::riffle:
      return std::make_unique<RiffleStrategy>(TieBreak::low_pile);
    case StrategyChoice::riffle_high_tie:
      return std::make_unique<RiffleStrategy>(TieBreak::high_pile);
    case StrategyChoice::greedy_bayes:
      return std::make_unique<GreedyBayesStrategy>();
  }
  throw std::invalid_argument("unknown strategy");
}

namespace {

Permutation draw(int n, Sampler sampler, Rng& rng) {
  return sampler == Sampler::two_step ? gsr_sample_two_step(n, rng) : word_to_permutation(sample_uniform_word(n, rng));
}

void run_range(const SimulationConfig& config, const Strategy& strategy, std::uint64_t begin, std::uint64_t end,
               std::vector<std::uint64_t>& counts) {
  for (std::uint64_t t = begin; t < end; ++t) {
    Rng rng = substream(config.master_seed, t);
    const Permutation p = draw(config.n, config.sampler, rng);
    ++counts[static_cast<std::size_t>(play_reward(strategy, p.cards()))];
  }
}

}  // namespace

SimulationReport run_trials(const SimulationConfig& config, unsigned workers) {
  if (config.n < 1) throw std::invalid_argument("deck size must be positive");
  if (config.trials < 1) throw std::invalid_argument("need at least one trial");
  if (config.strategy == StrategyChoice::greedy_bayes && config.n > GreedyBayesStrategy::kMaxSize) {
    throw std::invalid_argument("greedy-bayes simulation is limited to n <= 16");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto strategy = make_strategy(config.strategy);

  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, config.trials));
  const std::size_t bins = static_cast<std::size_t>(config.n) + 1;
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(bins, 0));

  const std::uint64_t chunk = config.trials / workers;
  const std::uint64_t extra = config.trials % workers;
  {
    std::vector<std::jthread> pool;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
      pool.emplace_back([&, w, begin, end] { run_range(config, *strategy, begin, end, partial[w]); });
      begin = end;
    }
  }

  std::vector<std::uint64_t> counts(bins, 0);
  for (const auto& p : partial) {
    for (std::size_t r = 0; r < bins; ++r) counts[r] += p[r];
  }

  SimulationReport report;
  report.config = config;
  unsigned __int128 sum = 0;
  unsigned __int128 sum_squares = 0;
  for (std::size_t r = 0; r < bins; ++r) {
    if (counts[r] == 0) continue;
    report.histogram[static_cast<int>(r)] = counts[r];
    sum += static_cast<unsigned __int128>(r) * counts[r];
    sum_squares += static_cast<unsigned __int128>(r) * r * counts[r];
  }
  const auto trials = static_cast<long double>(config.trials);
  report.mean_reward = static_cast<double>(static_cast<long double>(sum) / trials);
  if (config.trials > 1) {
    // T * sum r^2 - (sum r)^2 >= 0 exactly in integer arithmetic.
    const unsigned __int128 spread = static_cast<unsigned __int128>(config.trials) * sum_squares - sum * sum;
    const long double variance = static_cast<long double>(spread) / (trials * (trials - 1));
    report.standard_error = static_cast<double>(std::sqrt(variance / trials));
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

nlohmann::json to_json(const SimulationReport& report) {
  nlohmann::json histogram = nlohmann::json::object();
  for (const auto& [reward, count] : report.histogram) histogram[std::to_string(reward)] = count;
  return {
      {"config",
       {{"n", report.config.n},
        {"trials", report.config.trials},
        {"seed", report.config.master_seed},
        {"sampler", to_string(report.config.sampler)},
        {"strategy", to_string(report.config.strategy)}}},
      {"mean_reward", round_to_12_digits(report.mean_reward)},
      {"standard_error", round_to_12_digits(report.standard_error)},
      {"histogram", histogram},
  };
}

void write_histogram_csv(std::ostream& out, const SimulationReport& report) {
  out << "reward,count\n";
  for (const auto& [reward, count] : report.histogram) out << reward << ',' << count << '\n';
}

double chi_square_p_value(double statistic, int degrees_of_freedom) {
  if (degrees_of_freedom <= 0) return 1.0;
  const boost::math::chi_squared_distribution<double> law(degrees_of_freedom);
  return boost::math::cdf(boost::math::complement(law, std::max(statistic, 0.0)));
}

namespace {

ChiSquareReport goodness_of_fit(std::vector<std::uint64_t> observed, const std::vector<double>& probabilities,
                                std::uint64_t trials) {
  ChiSquareReport report;
  report.trials = trials;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = probabilities[i] * static_cast<double>(trials);
    const double gap = static_cast<double>(observed[i]) - expected;
    report.statistic += gap * gap / expected;
  }
  report.degrees_of_freedom = static_cast<int>(observed.size()) - 1;
  report.p_value = chi_square_p_value(report.statistic, report.degrees_of_freedom);
  report.observed = std::move(observed);
  return report;
}

// Indexes the distinct arrangements one riffle of n cards can produce.
std::map<Permutation, std::size_t> riffle_support(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("frequency tests need 1 <= n <= 12");
  std::map<Permutation, std::size_t> index;
  for_each_word(n, [&](std::uint64_t, std::span<const Card> cards) {
    index.emplace(Permutation(std::vector<Card>(cards.begin(), cards.end())), 0);
  });
  std::size_t next = 0;
  for (auto& entry : index) entry.second = next++;
  return index;
}

std::vector<std::uint64_t> sample_frequencies(int n, Sampler sampler, std::uint64_t trials, std::uint64_t seed,
                                              std::uint64_t first_index,
                                              const std::map<Permutation, std::size_t>& support) {
  std::vector<std::uint64_t> counts(support.size(), 0);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = substream(seed, first_index + t);
    ++counts[support.at(draw(n, sampler, rng))];
  }
  return counts;
}

}  // namespace

ChiSquareReport interleave_uniformity_test(int a, int b, std::uint64_t trials, std::uint64_t seed) {
  if (a < 0 || b < 0 || a + b < 1 || a + b > 12) {
    throw std::invalid_argument("uniformity test needs piles with 1 <= a + b <= 12");
  }
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  const int n = a + b;
  // Interleavings as masks with b bits set, ranked in increasing order.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) == b) masks.push_back(mask);
  }
  std::vector<std::uint64_t> observed(masks.size(), 0);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = substream(seed, t);
    const BinaryWord word = sequential_drop(a, b, rng);
    std::uint32_t mask = 0;
    for (int j = 0; j < n; ++j) mask |= static_cast<std::uint32_t>(word[j]) << j;
    ++observed[static_cast<std::size_t>(std::lower_bound(masks.begin(), masks.end(), mask) - masks.begin())];
  }
  const std::vector<double> uniform(masks.size(), 1.0 / static_cast<double>(masks.size()));
  return goodness_of_fit(std::move(observed), uniform, trials);
}

ChiSquareReport riffle_fit_test(int n, Sampler sampler, std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  const auto support = riffle_support(n);
  const ShuffleDistribution q = closed_form_q(n);
  std::vector<double> probabilities(support.size());
  for (const auto& [p, i] : support) probabilities[i] = to_double(q.probability(p));
  return goodness_of_fit(sample_frequencies(n, sampler, trials, seed, 0, support), probabilities, trials);
}

ChiSquareReport sampler_equivalence_test(int n, std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  const auto support = riffle_support(n);
  // The two samples use disjoint substream indices.
  const auto first = sample_frequencies(n, Sampler::two_step, trials, seed, 0, support);
  const auto second = sample_frequencies(n, Sampler::binary_word, trials, seed, trials, support);

  ChiSquareReport report;
  report.trials = trials;
  const double half = 0.5;  // equal sample sizes: expected cell = half the row total
  int used = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const double row = static_cast<double>(first[i] + second[i]);
    if (row == 0) continue;
    ++used;
    const double expected = row * half;
    const double g1 = static_cast<double>(first[i]) - expected;
    const double g2 = static_cast<double>(second[i]) - expected;
    report.statistic += (g1 * g1 + g2 * g2) / expected;
  }
  report.degrees_of_freedom = used - 1;
  report.p_value = chi_square_p_value(report.statistic, report.degrees_of_freedom);
  report.observed = first;
  report.observed.insert(report.observed.end(), second.begin(), second.end());
  return report;
}

}  // namespace riffle
