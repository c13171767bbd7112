#ifndef RIFFLE_MONTECARLO_HPP
#define RIFFLE_MONTECARLO_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "riffle/strategy.hpp"

namespace riffle {

enum class Sampler { two_step, binary_word };
enum class StrategyChoice { riffle, riffle_high_tie, greedy_bayes };

Sampler parse_sampler(const std::string& text);
std::string to_string(Sampler sampler);
StrategyChoice parse_strategy(const std::string& text);
std::string to_string(StrategyChoice choice);
std::unique_ptr<Strategy> make_strategy(StrategyChoice choice);

struct SimulationConfig {
  int n = 1;
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  Sampler sampler = Sampler::binary_word;
  StrategyChoice strategy = StrategyChoice::riffle;
};

struct SimulationReport {
  SimulationConfig config;
  double mean_reward = 0.0;
  double standard_error = 0.0;
  std::map<int, std::uint64_t> histogram;  // reward -> count
  std::chrono::nanoseconds elapsed{0};
};

/// Trial t draws its shuffle from substream(master_seed, t), so the report
/// (apart from elapsed) depends only on the config, never on workers.
/// workers == 0 picks the hardware concurrency.
SimulationReport run_trials(const SimulationConfig& config, unsigned workers = 0);

/// Elapsed time is left out so equal configs serialize identically.
nlohmann::json to_json(const SimulationReport& report);
void write_histogram_csv(std::ostream& out, const SimulationReport& report);

struct ChiSquareReport {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
  std::uint64_t trials = 0;
  std::vector<std::uint64_t> observed;
};

/// Upper tail P(X >= statistic) of a chi-square law; 1 when dof is 0.
double chi_square_p_value(double statistic, int degrees_of_freedom);

/// Samples GSR step (2) for piles of size a and b and tests the outcomes
/// against the uniform law on the C(a+b, a) interleavings. a + b <= 12.
ChiSquareReport interleave_uniformity_test(int a, int b, std::uint64_t trials, std::uint64_t seed);

/// Goodness of fit of a sampler's permutation frequencies against the
/// one-riffle law. n <= 12.
ChiSquareReport riffle_fit_test(int n, Sampler sampler, std::uint64_t trials, std::uint64_t seed);

/// Two-sample homogeneity test between the two-step and word samplers.
/// n <= 12.
ChiSquareReport sampler_equivalence_test(int n, std::uint64_t trials, std::uint64_t seed);

}  // namespace riffle

#endif  // RIFFLE_MONTECARLO_HPP
