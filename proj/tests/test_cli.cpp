// End-to-end tests driving the installed binary through a shell, checking
// output bytes and the exit-code contract: 0 all-hold, 1 counterexample,
// 2 usage, 3 internal I/O failure.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(FRANEL_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_file(const char* stem) {
  return std::filesystem::temp_directory_path() / stem;
}

}  // namespace

TEST_CASE("seq prints plain values by default") {
  CliResult r = run_cli("seq --family franel --count 5");
  CHECK(r.code == 0);
  CHECK(r.out == "1 2 10 56 346\n");
}

TEST_CASE("seq handles each family") {
  CHECK(run_cli("seq --family powersum --r 0 --count 3").out == "1 2 3\n");
  CHECK(run_cli("seq --family powersum --r 2 --count 4").out == "1 2 6 20\n");
  CHECK(run_cli("seq --family multinomial --m 3 --r 2 --count 4").out == "1 3 15 93\n");
  CHECK(run_cli("seq --family a002893 --count 4").out == "1 3 15 93\n");
}

TEST_CASE("seq json carries the request and decimal-string values") {
  CliResult r = run_cli("seq --family franel --count 5 --mod 100 --format json");
  REQUIRE(r.code == 0);
  json parsed = json::parse(r.out);
  CHECK(parsed.at("family") == "franel");
  CHECK(parsed.at("count") == 5);
  CHECK(parsed.at("modulus") == "100");
  REQUIRE(parsed.at("values").size() == 5);
  CHECK(parsed.at("values").at(4) == "46");  // 346 mod 100
  CHECK_FALSE(parsed.contains("r"));
}

TEST_CASE("seq csv has an index column") {
  CliResult r = run_cli("seq --family franel --count 3 --format csv");
  CHECK(r.out == "index,value\n0,1\n1,2\n2,10\n");
}

TEST_CASE("seq usage errors exit 2") {
  CHECK(run_cli("seq --family fibonacci --count 3").code == 2);
  CHECK(run_cli("seq --family powersum --count 3").code == 2);  // missing --r
  CHECK(run_cli("seq --family franel --r 2 --count 3").code == 2);
  CHECK(run_cli("seq --family franel --count 0").code == 2);
  CHECK(run_cli("seq --family franel --count 3 --format yaml").code == 2);
  CHECK(run_cli("seq --family franel --count 3 --mod nonsense").code == 2);
}

TEST_CASE("oracle agrees and reports OK") {
  CliResult r = run_cli("oracle --m 3 --n 2 --r 2");
  CHECK(r.code == 0);
  CHECK(r.out == "15 == 15 OK\n");
}

TEST_CASE("oracle refuses to exceed its budget, exit 2") {
  CliResult r = run_cli("oracle --m 6 --n 40 --r 2", /*merge_stderr=*/true);
  CHECK(r.code == 2);
  CHECK(r.out.find("1221759") != std::string::npos);
  CHECK(run_cli("oracle --m 6 --n 40 --r 2 --budget 2000000").code == 0);
}

TEST_CASE("verify exits 0 and reports errata per sub-suite") {
  CliResult r = run_cli("verify --suite lemmas --pmax 30 --format json --stable");
  REQUIRE(r.code == 0);
  json parsed = json::parse(r.out);
  CHECK(parsed.at("summary").at("failed") == "0");
  CHECK(parsed.at("errata_notes").size() == 1);
  CHECK_FALSE(parsed.contains("generated_at"));

  CliResult all = run_cli("verify --suite all --nmax 30 --pmax 30 --format json --stable");
  REQUIRE(all.code == 0);
  json parsed_all = json::parse(all.out);
  CHECK(parsed_all.at("summary").at("failed") == "0");
  CHECK(parsed_all.at("errata_notes").size() == 3);
}

TEST_CASE("verify plain format reads like a summary") {
  CliResult r = run_cli("verify --suite lemmas --pmax 20 --format plain");
  CHECK(r.code == 0);
  CHECK(r.out.find("every check holds") != std::string::npos);
  CHECK(r.out.find("failed: 0") != std::string::npos);
}

TEST_CASE("scan reproduces the frozen partial-sum table") {
  CliResult r = run_cli("scan --conjecture conj1-even --rmax 3 --nmax 9 --format json --stable");
  REQUIRE(r.code == 0);
  json parsed = json::parse(r.out);
  CHECK(parsed.at("summary").at("failed") == "0");
  const json& sums = parsed.at("data").at("partial_sums_r3");
  const char* expect[] = {"2",          "12",          "540",
                          "16600",      "784500",      "35315784",
                          "1772807064", "90283679280", "4777960538340"};
  REQUIRE(sums.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) CHECK(sums.at(i) == expect[i]);
}

TEST_CASE("scan output is byte-identical across thread counts") {
  std::string args = "scan --conjecture conj1 --nmax 40 --format json --stable";
  CliResult one = run_cli(args + " --jobs 1");
  CliResult eight = run_cli(args + " --jobs 8");
  REQUIRE(one.code == 0);
  REQUIRE(eight.code == 0);
  CHECK(one.out == eight.out);
  CHECK(run_cli(args + " --jobs 1").out == one.out);  // and across runs
}

TEST_CASE("--out writes exactly what stdout would carry") {
  auto path = temp_file("franel_cli_out.json");
  std::filesystem::remove(path);
  std::string args = "verify --suite lemmas --pmax 20 --format json --stable";
  CliResult direct = run_cli(args);
  CliResult filed = run_cli(args + " --out " + path.string());
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::filesystem::remove(path);
}

TEST_CASE("unwritable --out exits 3") {
  CliResult r = run_cli(
      "verify --suite lemmas --pmax 20 --out /nonexistent/dir/report.json",
      /*merge_stderr=*/true);
  CHECK(r.code == 3);
  CHECK_FALSE(r.out.empty());
}

TEST_CASE("cache round-trip through the CLI") {
  auto path = temp_file("franel_cli_cache.json");
  std::filesystem::remove(path);
  std::string args = "scan --conjecture conj1 --nmax 15 --rmax 2 --format json --stable --cache " +
                     path.string();
  CliResult first = run_cli(args);
  REQUIRE(first.code == 0);
  CHECK(std::filesystem::exists(path));
  CliResult second = run_cli(args);
  CHECK(second.code == 0);
  CHECK(second.out == first.out);  // warm cache changes nothing observable

  // Tamper with a cached value: the run warns, discards, and stays correct.
  json doc = json::parse(slurp(path));
  bool poisoned = false;
  for (auto& entry : doc.at("entries"))
    if (!poisoned && entry.at("values").size() > 3) {
      entry.at("values")[3] = "999";
      poisoned = true;
    }
  REQUIRE(poisoned);
  {
    std::ofstream out(path);
    out << doc.dump(2);
  }
  CliResult third = run_cli(args, /*merge_stderr=*/true);
  CHECK(third.code == 0);
  CHECK(third.out.find("failed re-validation") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("global usage errors") {
  CHECK(run_cli("").code == 2);                         // a subcommand is required
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("scan --conjecture conj9").code == 2);
  CHECK(run_cli("scan --conjecture conj1 --mmax 3").code == 2);
  CHECK(run_cli("verify --suite nonsense").code == 2);
  CHECK(run_cli("verify --suite theorems --pmax 3").code == 2);
  CHECK(run_cli("scan --conjecture conj1 --jobs 0").code == 2);
}

TEST_CASE("--version prints the tool version") {
  CliResult r = run_cli("--version");
  CHECK(r.code == 0);
  CHECK(r.out == "1.0.0\n");
}

TEST_CASE("--help exits 0 and names the subcommands") {
  CliResult r = run_cli("--help");
  CHECK(r.code == 0);
  for (const char* sub : {"seq", "verify", "scan", "oracle"})
    CHECK(r.out.find(sub) != std::string::npos);
}
