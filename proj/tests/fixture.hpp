#ifndef RIFFLE_TESTS_FIXTURE_HPP
#define RIFFLE_TESTS_FIXTURE_HPP

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

// Committed envelope bounds written by tools/calibrate_envelopes.
inline nlohmann::json load_envelope_fixture() {
  const std::string path = std::string(RIFFLE_FIXTURE_DIR) + "/envelopes.json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  return nlohmann::json::parse(in);
}

#endif  // RIFFLE_TESTS_FIXTURE_HPP
