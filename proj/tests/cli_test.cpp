#include <cstdio>
#include <string>
#include <vector>

#include "avroot/numeric.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(AVROOT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("avg records") {
  auto r = run_cli("avg --s 1 --no-timing");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["parity_biased"] == false);
  CHECK(j["sign"] == 0);
  CHECK(j["interval"]["lo"] == "0/1");
  CHECK(j["interval"]["hi"] == "0/1");

  r = run_cli("avg --s 7 --cutoff 1000 --no-timing");
  REQUIRE(r.exit_code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["parity_biased"] == true);
  CHECK(j["sign"] == 1);
  CHECK(j["exceptional_factors"][0]["num"] == "-1");
  CHECK(j["exceptional_factors"][0]["den"] == "2");
}

TEST_CASE("avg rejects s = 0") {
  auto r = run_cli("avg --s 0");
  CHECK(r.exit_code == 2);
}

TEST_CASE("fraction fields round-trip through the parser") {
  auto r = run_cli("avg --s -11 --cutoff 500 --no-timing");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"lo", "hi"}) {
    std::string text = j["interval"][key];
    auto parsed = avroot::Rational::parse(text);
    CHECK(parsed.str() == text);
  }
  std::string fp = j["finite_product"];
  CHECK(avroot::Rational::parse(fp).str() == fp);
}

TEST_CASE("identical invocations are byte-identical without timing") {
  auto a = run_cli("avg --s 7 --cutoff 2000 --no-timing");
  auto b = run_cli("avg --s 7 --cutoff 2000 --no-timing");
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("factor records") {
  auto r = run_cli("factor --s 2 --p 5 --no-timing");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["factor"] == "1/1");

  r = run_cli("factor --s 7 --p 2 --no-timing");
  j = nlohmann::json::parse(r.out);
  CHECK(j["factor"] == "-1/2");

  r = run_cli("factor --s 1 --p 3 --no-timing");
  j = nlohmann::json::parse(r.out);
  CHECK(j["factor"] == "2/21");
  CHECK(j["regions"]["greater"] == "1/9");
  CHECK(j["regions"]["equal"] == "-1/63");

  CHECK(run_cli("factor --s 1 --p 6").exit_code == 2);
}

TEST_CASE("verify verdicts and exit codes") {
  auto r = run_cli("verify --s 2 --p 5 --depth 10 --no-timing");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "EXACT");

  r = run_cli("verify --s 1 --p 5 --depth 12 --no-timing");
  REQUIRE(r.exit_code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "CONTAINED");
  auto width = avroot::Rational::parse(j["oracle"]["width"].get<std::string>());
  CHECK(width <= avroot::Rational(4, avroot::pow_int(5, 9)));

  CHECK(run_cli("verify --s 1 --p 3").exit_code == 2);
  CHECK(run_cli("verify --s 1 --p 2").exit_code == 2);
}

TEST_CASE("scan produces the schema and the mod-8 pattern") {
  auto r = run_cli("scan --from 1 --to 8 --cutoff 100");
  REQUIRE(r.exit_code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 10);
  CHECK(lines[0] == "# schema=1");
  CHECK(lines[1] == "s,parity_biased,sign,lo,hi,E2,E3");
  const bool expected[] = {false, true, false, true, false, true, true, true};
  for (int i = 0; i < 8; ++i) {
    std::string& row = lines[2 + i];
    auto comma = row.find(',');
    CHECK(row.substr(0, comma) == std::to_string(i + 1));
    CHECK(row.substr(comma + 1, expected[i] ? 4 : 5) == (expected[i] ? "true" : "false"));
  }

  r = run_cli("scan --from -2 --to -1 --cutoff 100");
  lines = split_lines(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[2].substr(0, 8) == "-2,true,");
  CHECK(lines[3].substr(0, 8) == "-1,true,");

  // A range that only contains 0 gives just the header.
  r = run_cli("scan --from 0 --to 0 --cutoff 100");
  lines = split_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[1] == "s,parity_biased,sign,lo,hi,E2,E3");
}

TEST_CASE("scan writes files and rejects bad paths") {
  std::string path = "/tmp/avroot_scan_test.csv";
  auto r = run_cli("scan --from 1 --to 3 --cutoff 100 --csv " + path);
  CHECK(r.exit_code == 0);
  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  fclose(f);
  std::remove(path.c_str());

  CHECK(run_cli("scan --from 1 --to 3 --csv /nonexistent-dir/x.csv").exit_code == 2);
}

TEST_CASE("invariants records") {
  auto r = run_cli("invariants --s 1 --t 2 --no-timing");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["c4"] == "432");
  CHECK(j["c6"] == "-10368");
  CHECK(j["disc"] == "-15552");
  CHECK(j["j"] == "-5184/1");

  r = run_cli("invariants --s 4 --t 2 --no-timing");
  j = nlohmann::json::parse(r.out);
  CHECK(j["j"] == "singular");

  r = run_cli("invariants --s -1 --t 0 --no-timing");
  j = nlohmann::json::parse(r.out);
  CHECK(j["disc"] == "1728");
  CHECK(j["j"] == "1728/1");
}
