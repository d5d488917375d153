#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  CliResult r;
  std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST_CASE("classify command") {
  auto r = run_cli("classify --n 3 --sigma 1 --lambda 1/4 --json");
  CHECK(r.status == 0);
  auto j = parse(r.out);
  CHECK(j["schema"] == "1");
  CHECK(j["verdict"] == "ComplementarySeries");

  auto t = run_cli("classify --n 3 --sigma 1 --lambda 1/4");
  CHECK(t.status == 0);
  CHECK(t.out.find("ComplementarySeries") != std::string::npos);
}

TEST_CASE("validation failures exit with 2") {
  CHECK(run_cli("classify --n 3 --sigma 1 --lambda x").status == 2);
  CHECK(run_cli("classify --n 2 --sigma 1 --lambda 1/4").status == 2);
  CHECK(run_cli("classify --n 3 --sigma 1,1 --lambda 1/4").status == 2);
  CHECK(run_cli("classify --n 3 --sigma 1").status == 2);
  CHECK(run_cli("eigenvalues --n 3 --sigma 1 --lambda 0 --picture bogus").status == 2);
  CHECK(run_cli("nonsense").status == 2);
}

TEST_CASE("eigenvalue tables") {
  auto r = run_cli("eigenvalues --picture fourier --n 4 --sigma 2,0 --lambda 1 --json");
  CHECK(r.status == 0);
  auto j = parse(r.out);
  CHECK(j["eigenvalues"]["0"] == "6");
  CHECK(j["eigenvalues"]["1"] == "0");
  CHECK(j["eigenvalues"]["2"] == "0");

  auto c = run_cli("eigenvalues --picture compact --n 3 --sigma 1 --lambda 1/2 --json");
  CHECK(c.status == 0);
  auto jc = parse(c.out);
  CHECK(jc["eigenvalues"]["1,0"] == "1");
  CHECK(jc["eigenvalues"]["1,1"] == "0");

  auto t = run_cli("eigenvalues --picture fourier --n 4 --sigma 2,0 --lambda 1");
  CHECK(t.out.find("6") != std::string::npos);
}

TEST_CASE("factors command round-trips through json") {
  auto r = run_cli("factors --n 3 --sigma 1 --lambda 1/2 --json");
  CHECK(r.status == 0);
  auto j = parse(r.out);
  CHECK(j["factors"].size() == 3);
  CHECK(j["factors"][0]["tag"] == "SubPlus");
}

TEST_CASE("dual command") {
  auto r = run_cli("dual --n 3 --bound 1 --json");
  CHECK(r.status == 0);
  auto j = parse(r.out);
  CHECK(j["items"].size() > 3);
}

TEST_CASE("branch and whittaker commands") {
  auto r = run_cli("branch --n 3 --sigma 1 --lambda 1/4 --json");
  CHECK(r.status == 0);
  auto j = parse(r.out);
  CHECK(j["restrictions"].size() == 1);
  CHECK(j["restrictions"][0]["whittaker_dim"] == 3);
  CHECK(j["restrictions"][0]["constituents"].size() == 3);

  CHECK(run_cli("branch --n 3 --sigma 1 --lambda 2 --json").status == 2);

  auto w = run_cli("whittaker --n 3 --sigma 1 --lambda 1/2 --json");
  CHECK(w.status == 0);
  auto jw = parse(w.out);
  CHECK(jw["whittaker"].size() == 3);
  long long total = 0;
  for (const auto& rec : jw["whittaker"]) total += rec["whittaker_dim"].get<long long>();
  CHECK(total == 3);
}

TEST_CASE("verify command emits a report stream") {
  auto r = run_cli("verify --suite decomposition --seed 7 --json");
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    auto j = parse(line);
    CHECK(j["schema"] == "1");
    CHECK(j["pass"] == true);
    CHECK(j["measured"].get<double>() <= j["tolerance"].get<double>());
    ++count;
  }
  CHECK(count == 6);
  CHECK(run_cli("verify --suite bogus").status == 2);
}
