#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "verlinde/cli.hpp"
#include "verlinde/report.hpp"

using namespace verlinde;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

RunConfig small_grid() {
  RunConfig config;
  config.types = {{Series::A, 1}, {Series::A, 2}, {Series::B, 2}, {Series::C, 3}, {Series::G, 2}};
  config.level_min = 1;
  config.level_max = 10;
  return config;
}

}  // namespace

TEST_CASE("verify passes on a small grid") {
  const auto report = run_verify(small_grid());
  CHECK(report.summary.total == report.entries.size());
  CHECK(report.summary.total > 0);
  CHECK(report.summary.mismatches == 0);
  CHECK(report.exit_code(false) == 0);
  for (const auto& e : report.entries) CHECK(e.match);
}

TEST_CASE("verify reports a corrupted counter") {
  const FormulaCounter broken = [](LieType t, std::int64_t m, std::uint64_t p, ExceptionalReading r) {
    const auto n = count(t, m, p, r);
    return t.series == Series::C && m == 9 ? n + 1 : n;
  };
  const auto report = run_verify(small_grid(), broken);
  CHECK(report.exit_code(false) == 2);
  CHECK(report.exit_code(true) == 2);
  CHECK(report.summary.mismatches >= 1);
  CHECK(report.summary.flagged_mismatches == 0);
  for (const auto& e : report.entries) {
    if (e.match) continue;
    CHECK(e.type == LieType{Series::C, 3});
    CHECK(e.level == 9);
    CHECK(e.formula_count == e.oracle_count + 1);
    CHECK_FALSE(e.flagged);
  }
}

TEST_CASE("alternate reading mismatches are flagged") {
  RunConfig config;
  config.types = {{Series::E, 6}};
  config.level_min = 13;
  config.level_max = 13;
  config.reading = ExceptionalReading::alternate;
  const auto report = run_verify(config);
  REQUIRE(report.summary.mismatches == 1);
  CHECK(report.summary.flagged_mismatches == 1);
  CHECK(report.exit_code(false) == 2);
  CHECK(report.exit_code(true) == 0);

  config.reading = ExceptionalReading::literal;
  CHECK(run_verify(config).exit_code(false) == 0);
}

TEST_CASE("RunConfig validation") {
  RunConfig config = small_grid();
  CHECK_NOTHROW(config.check());
  config.types.clear();
  CHECK_THROWS_AS(config.check(), std::invalid_argument);
  config = small_grid();
  config.level_min = 5;
  config.level_max = 4;
  CHECK_THROWS_AS(config.check(), std::invalid_argument);
  config = small_grid();
  config.level_min = 0;
  CHECK_THROWS_AS(config.check(), std::invalid_argument);
  config = small_grid();
  config.primes = {2, 9};
  CHECK_THROWS_AS(config.check(), std::invalid_argument);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("JSON round trips") {
  const RootSystem e6 = build_root_system({Series::E, 6});
  const auto profile = completion_profile(e6, 16);
  const auto back = completion_profile_from_json(to_json(profile));
  CHECK(back.group == profile.group);
  CHECK(back.level == profile.level);
  CHECK(back.counts == profile.counts);
  CHECK(back.regular_total == profile.regular_total);
  CHECK(back.unclassified == profile.unclassified);
  CHECK(to_json(profile)["counts"]["2"] == 14);

  const auto set = enumerate_regular_weights(build_root_system({Series::G, 2}), 7);
  const auto set_back = regular_weight_set_from_json(to_json(set));
  CHECK(set_back.level == 7);
  CHECK(set_back.weights == set.weights);

  const auto report = run_verify(small_grid());
  CHECK(to_json(cross_check_report_from_json(to_json(report))) == to_json(report));
}

TEST_CASE("CSV output") {
  RunConfig config;
  config.types = {{Series::A, 1}};
  config.level_min = 4;
  config.level_max = 4;
  const std::string csv = to_csv(run_verify(config));
  CHECK(csv == "type,rank,level,prime,oracle,formula,match,flagged\nA,1,4,2,3,3,true,false\n");
}

TEST_CASE("CLI count, completion and enumerate") {
  auto r = cli({"count", "--type", "C", "--rank", "2", "--level", "4", "--prime", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  r = cli({"count", "--type", "A", "--rank", "1", "--level", "4", "--prime", "2", "--engine", "oracle"});
  CHECK(r.out == "3\n");
  r = cli({"count", "--type", "A", "--rank", "1", "--level", "3", "--prime", "2"});
  CHECK(r.out == "0\n");

  r = cli({"completion", "--type", "A", "--rank", "1", "--level", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("A1 level 6: Z_2 + Z_3\n", 0) == 0);

  r = cli({"enumerate", "--type", "A", "--rank", "2", "--level", "3"});
  CHECK(r.out == "[[1,1]]\n");
  r = cli({"enumerate", "--type", "G2", "--level", "5", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["result"]["weights"] == Json::parse("[[1,1],[2,1]]"));
  CHECK(j.contains("query"));
  CHECK(j["provenance"]["tool"] == "verlinde");
}

TEST_CASE("CLI errors map to exit codes") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"count", "--type", "A", "--rank", "1", "--level", "4"}).code == 1);
  CHECK(cli({"count", "--type", "A", "--rank", "1", "--level", "4", "--prime", "4"}).code == 1);
  CHECK(cli({"count", "--type", "E", "--rank", "5", "--level", "4", "--prime", "2"}).code == 1);
  CHECK(cli({"enumerate", "--type", "A", "--rank", "1", "--level", "0"}).code == 1);
  CHECK(cli({"verify", "--type", "A1", "--level-min", "3", "--level-max", "2"}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
}

TEST_CASE("CLI verify exit codes and determinism") {
  auto r = cli({"verify", "--type", "E6", "--level-min", "12", "--level-max", "14"});
  CHECK(r.code == 0);
  r = cli({"verify", "--type", "E6", "--level-min", "12", "--level-max", "14", "--e6e7-reading", "alternate"});
  CHECK(r.code == 2);
  r = cli({"verify", "--type", "E6", "--level-min", "12", "--level-max", "14", "--e6e7-reading", "alternate",
           "--allow-flagged"});
  CHECK(r.code == 0);

  const std::vector<std::string> args = {"verify", "--type", "A1-A3,B2,G2", "--level-min", "1", "--level-max", "9"};
  Json first = Json::parse(cli(args).out);
  Json second = Json::parse(cli(args).out);
  first.erase("provenance");
  second.erase("provenance");
  CHECK(first.dump() == second.dump());
}

TEST_CASE("CLI --out writes a file") {
  const auto path = std::filesystem::temp_directory_path() / "verlinde_cli_out_test.csv";
  std::filesystem::remove(path);
  const auto r = cli({"verify", "--type", "A1", "--level", "4", "--format", "csv", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str().rfind("type,rank,level,prime", 0) == 0);
  std::filesystem::remove(path);
}
