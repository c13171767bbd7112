#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "riffle/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = riffle::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("riffle_test_cli_" + name);
}

}  // namespace

TEST_CASE("exact-g prints the ladder value") {
  auto r = run({"exact-g", "--n", "3", "--mode", "rational"});
  CHECK(r.code == 0);
  CHECK(r.out.find("G(3) = 19/8\n") == 0);
  CHECK(r.out.find("target = 2.88197659789") != std::string::npos);

  r = run({"exact-g", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("G(1) = 1\n") == 0);

  r = run({"exact-g", "--n", "3", "--mode", "float"});
  CHECK(r.out.find("G(3) = 2.375\n") == 0);
}

TEST_CASE("exact-g csv and json") {
  auto r = run({"exact-g", "--n", "2", "--csv"});
  CHECK(r.out.rfind("n,G,target,error\n2,7/4,", 0) == 0);

  r = run({"exact-g", "--n", "3", "--json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["artifact_version"] == "1.0.0");
  CHECK(doc["command"] == "exact-g");
  CHECK(doc["mode"] == "rational");
  CHECK(doc["results"]["G"]["mode"] == "rational");
  CHECK(doc["results"]["G"]["value"] == "19/8");
  CHECK(doc["results"]["target"]["mode"] == "float");
  CHECK(doc.dump(2) + "\n" == r.out);
}

TEST_CASE("exact-g at n = 10000 in float mode") {
  const auto r = run({"exact-g", "--n", "10000", "--mode", "float", "--json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  const double error = doc["results"]["error"]["value"].get<double>();
  // Measured: the error settles just below -1/2.
  CHECK(error == doctest::Approx(-0.505984541553).epsilon(1e-9));
}

TEST_CASE("asymptotics csv") {
  const auto r = run({"asymptotics", "--max-n", "3", "--csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "n,G,target,error\n"
        "1,1,1.2978845608,-0.297884560803\n"
        "2,1.75,2.1283791671,-0.378379167096\n"
        "3,2.375,2.88197659789,-0.506976597885\n");
  CHECK(run({"asymptotics", "--max-n", "10001"}).code == 1);
}

TEST_CASE("play transcripts") {
  auto r = run({"play", "--n", "3", "--perm", "2,3,1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "deck: 2,3,1\n"
        "step,guess,revealed,correct\n"
        "1,1,2,no\n"
        "2,1,3,no\n"
        "3,1,1,yes\n"
        "reward: 1\n");

  r = run({"play", "--perm", "2,3,1", "--json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["results"]["reward"] == 1);
  CHECK(doc["results"]["steps"].size() == 3);

  const auto seeded = run({"play", "--n", "10", "--seed", "5"});
  CHECK(seeded.code == 0);
  CHECK(seeded.out == run({"play", "--n", "10", "--seed", "5"}).out);

  r = run({"play", "--perm", "1,2,3", "--strategy", "greedy-bayes"});
  CHECK(r.out.find("reward: 3") != std::string::npos);
}

TEST_CASE("play rejects bad decks") {
  auto r = run({"play", "--perm", "3,2,1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("3 rising sequences") != std::string::npos);
  CHECK(run({"play", "--perm", "1,1,2"}).code == 1);
  CHECK(run({"play", "--perm", "1,,2"}).code == 1);
  CHECK(run({"play", "--perm", "a,b"}).code == 1);
  CHECK(run({"play", "--n", "4", "--perm", "2,3,1"}).code == 1);
  CHECK(run({"play", "--n", "3"}).code == 1);
  CHECK(run({"play", "--perm", "1,2", "--tie-break", "middle"}).code == 1);
}

TEST_CASE("table-f") {
  auto r = run({"table-f", "--max", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("f(1,1)=3/2") != std::string::npos);
  r = run({"table-f", "--max", "3", "--csv"});
  CHECK(r.out.find("a,b,f\n") == 0);
  CHECK(r.out.find("\n1,2,7/3\n") != std::string::npos);
  r = run({"table-f", "--max", "4", "--json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["results"]["f"][2][2] == "17/6");
}

TEST_CASE("simulate is deterministic and round-trips") {
  const std::vector<std::string> args{"simulate", "--n", "8", "--trials", "5000", "--seed", "11"};
  const auto first = run(args);
  REQUIRE(first.code == 0);
  auto with_workers = args;
  with_workers.insert(with_workers.end(), {"--workers", "3"});
  CHECK(run(with_workers).out == first.out);
  CHECK(run(args).out == first.out);

  const auto doc = nlohmann::json::parse(first.out);
  CHECK(doc.dump(2) + "\n" == first.out);
  CHECK(doc["results"]["config"]["trials"] == 5000);
  std::uint64_t total = 0;
  for (const auto& [reward, count] : doc["results"]["histogram"].items()) total += count.get<std::uint64_t>();
  CHECK(total == 5000);

  const auto csv = temp_path("hist.csv");
  auto with_csv = args;
  with_csv.insert(with_csv.end(), {"--histogram-csv", csv.string()});
  CHECK(run(with_csv).code == 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "reward,count");
  std::filesystem::remove(csv);
}

TEST_CASE("simulate validation") {
  CHECK(run({"simulate", "--n", "8", "--trials", "0", "--seed", "1"}).code == 1);
  CHECK(run({"simulate", "--n", "20", "--trials", "10", "--seed", "1", "--strategy", "greedy-bayes"}).code == 1);
  CHECK(run({"simulate", "--n", "8", "--trials", "10", "--seed", "1", "--sampler", "bogus"}).code == 1);
}

TEST_CASE("verify replays every check") {
  const auto r = run({"verify", "--suite", "paper", "--max-n", "12", "--json"});
  const auto doc = nlohmann::json::parse(r.out);
  const auto& checks = doc["results"]["checks"];
  CHECK(checks.size() == 14);
  for (const auto& c : checks) {
    INFO(c["name"].get<std::string>(), ": ", c["detail"].get<std::string>());
    if (c["name"] == "error-below-half") {
      // |G(n) - n/2 - sqrt(2n/pi)| < 0.5 does not hold: G(3) = 19/8 already
      // misses the target by 0.507.
      CHECK_FALSE(c["passed"].get<bool>());
    } else {
      CHECK(c["passed"].get<bool>());
    }
  }
  CHECK(r.code == (doc["results"]["passed"].get<bool>() ? 0 : 1));
  CHECK(run({"verify", "--suite", "other"}).code == 1);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"exact-g"}).code == 1);
  CHECK(run({"exact-g", "--n", "0"}).code == 1);
  CHECK(run({"exact-g", "--n", "201"}).code == 1);
  CHECK(run({"exact-g", "--n", "3", "--mode", "decimal"}).code == 1);
  CHECK(run({"exact-g", "--n", "3", "--csv", "--json"}).code == 1);
  const auto version = run({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out == "1.0.0\n");
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("config file sets the default mode") {
  const auto path = temp_path("config.ini");
  {
    std::ofstream cfg(path);
    cfg << "[exact-g]\nmode=\"float\"\n";
  }
  auto r = run({"--config", path.string(), "exact-g", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("G(3) = 2.375\n") == 0);
  r = run({"--config", path.string(), "exact-g", "--n", "3", "--mode", "rational"});
  CHECK(r.out.find("G(3) = 19/8\n") == 0);
  std::filesystem::remove(path);
}
