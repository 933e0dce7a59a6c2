#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

std::string cli_path() {
  const char* path = std::getenv("CONTAGRID_CLI");
  REQUIRE_MESSAGE(path != nullptr, "CONTAGRID_CLI must point at the CLI binary");
  return path;
}

CommandResult run(const std::string& args, const std::string& extra_env = "") {
  std::string command = extra_env + cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  std::array<char, 4096> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.output.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("simulate reaches FULL and exits 0") {
  auto r = run("simulate --dims 4x5 --seeds \"1,1;3,3;4,5\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "FULL\n");
}

TEST_CASE("simulate trace prints per-round frames") {
  auto r = run("simulate --dims 3x3 --seeds \"1,1;3,3\" --trace");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("round 0\nS..\n...\n..S\n") != std::string::npos);
  CHECK(r.output.find("round 1\nS..\n.#.\n..S\n") != std::string::npos);
  CHECK(r.output.rfind("FULL\n") == r.output.size() - 5);
}

TEST_CASE("simulate reports STUCK with exit 2") {
  auto r = run("simulate --dims 2x4 --seeds \"1,1;2,4\"");
  CHECK(r.exit_code == 2);
  CHECK(r.output == "STUCK after 0 rounds\n");
}

TEST_CASE("simulate usage errors exit 64") {
  CHECK(run("simulate --dims 0x4 --seeds \"\"").exit_code == 64);
  CHECK(run("simulate --dims 2x2 --seeds \"5,5\"").exit_code == 64);
  CHECK(run("simulate").exit_code == 64);
  CHECK(run("nonsense").exit_code == 64);
}

TEST_CASE("scenario round trip through JSON") {
  std::string path = "cli_scenario_test.json";
  {
    std::ofstream out(path);
    out << R"({"n":4,"m":5,"seeds":[[1,1],[3,3],[4,5]]})";
  }
  auto r = run("simulate --scenario " + path + " --json");
  std::remove(path.c_str());
  REQUIRE(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["full"] == true);
  auto scenario = doc["scenario"];
  CHECK(scenario["n"] == 4);
  CHECK(scenario["m"] == 5);
  CHECK(scenario["seeds"] == nlohmann::json::parse("[[1,1],[3,3],[4,5]]"));
}

TEST_CASE("gamma command") {
  auto r = run("gamma --dims 2x7");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "5\n");
  CHECK(run("gamma --dims 1x1").output == "1\n");
  auto all = run("gamma --dims 4x5 --method all");
  CHECK(all.exit_code == 0);
  CHECK(all.output.find("formula 3") != std::string::npos);
  CHECK(all.output.find("brute 3") != std::string::npos);
  auto json_out = run("gamma --dims 4x5 --method all --json");
  auto doc = nlohmann::json::parse(json_out.output);
  CHECK(doc["agree"] == true);
}

TEST_CASE("alpha command with witnesses") {
  auto r = run("alpha --dims 3x4 --witnesses");
  REQUIRE(r.exit_code == 0);
  // first line is the count, then one canonical witness per line
  std::size_t newline = r.output.find('\n');
  REQUIRE(newline != std::string::npos);
  CHECK(r.output.substr(0, newline) == "20");
  int lines = 0;
  for (char c : r.output) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 21);
}

TEST_CASE("beta command uses raw counting") {
  auto r = run("beta --dims 1x5");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "5\n");
  auto r22 = run("beta --dims 2x2");
  CHECK(r22.output == "7\n");
}

TEST_CASE("table command emits stable CSV") {
  auto r = run("table gamma --max 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "n,m,value\n1,1,1\n1,2,2\n1,3,2\n2,2,2\n2,3,3\n3,3,2\n");
  auto zero = run("table alpha --max 0");
  CHECK(zero.output == "n,m,value\n0,0,0\n");
}

TEST_CASE("table output is byte-stable across worker counts") {
  auto j1 = run("table alpha --max 5 --jobs 1");
  auto j2 = run("table alpha --max 5 --jobs 2");
  auto j8 = run("table alpha --max 5 --jobs 8");
  CHECK(j1.exit_code == 0);
  CHECK(j1.output == j2.output);
  CHECK(j1.output == j8.output);
}

TEST_CASE("alpha JSON is byte-stable across worker counts") {
  auto j1 = run("alpha --dims 5x6 --json --jobs 1");
  auto j2 = run("alpha --dims 5x6 --json --jobs 8");
  CHECK(j1.exit_code == 0);
  CHECK(j1.output == j2.output);
}

TEST_CASE("verify command") {
  auto r = run("verify --suite tables --max 5 --cases 50");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["suite"] == "tables");
  CHECK(doc["summary"]["proved-claim-FAIL"] == 0);
  for (const auto& entry : doc["entries"]) {
    CHECK(entry["status"] != "proved-claim-FAIL");
  }
}

TEST_CASE("budget environment variable applies") {
  auto r = run("alpha --dims 4x5", "CONTAGRID_BUDGET=100 ");
  CHECK(r.exit_code == 64);
  auto forced = run("alpha --dims 4x5 --force", "CONTAGRID_BUDGET=100 ");
  CHECK(forced.exit_code == 0);
  CHECK(forced.output == "8\n");
  auto flag_beats_env = run("alpha --dims 4x5 --budget 2000", "CONTAGRID_BUDGET=100 ");
  CHECK(flag_beats_env.exit_code == 0);
}
