// Measures the O(1) envelopes of the asymptotic expansions and writes them as
// a regression fixture:
//
//   calibrate_envelopes [--max-n 5000] [--out tests/fixtures/envelopes.json]
//
// Each envelope is the largest deviation seen over 1 <= n <= max-n, rounded
// up to three decimals. The acceptance suite asserts the deviations stay
// inside these committed bounds.

#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "riffle/envelopes.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Calibrate asymptotic envelope fixtures"};
  int max_n = 5000;
  std::string out_path = "tests/fixtures/envelopes.json";
  app.add_option("--max-n", max_n, "Largest deck size scanned")->check(CLI::Range(1, 100000));
  app.add_option("--out", out_path, "Fixture path");
  CLI11_PARSE(app, argc, argv);

  const auto measured = riffle::measure_envelopes(max_n);
  auto round_up = [](double x) { return std::ceil(x * 1000.0) / 1000.0; };

  nlohmann::json fixture = {
      {"max_n", max_n},
      {"measured",
       {{"a_partial_sum", measured.a_partial_sum},
        {"big_f", measured.big_f},
        {"zero_feedback", measured.zero_feedback}}},
      {"bounds",
       {{"a_partial_sum", round_up(measured.a_partial_sum)},
        {"big_f", round_up(measured.big_f)},
        {"zero_feedback", round_up(measured.zero_feedback)}}},
  };
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << '\n';
    return 1;
  }
  out << fixture.dump(2) << '\n';
  std::cout << fixture.dump(2) << '\n';
  return 0;
}
