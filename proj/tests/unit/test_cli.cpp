#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "siegel/cli.hpp"
#include "siegel/error.hpp"

using namespace siegel;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "siegel-trace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("siegel-cli-" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  return dir;
}

std::string strip_timestamp(std::string s) {
  const std::string key = "\"generatedAt\": \"";
  for (auto at = s.find(key); at != std::string::npos; at = s.find(key, at + 1)) s.replace(at + key.size(), 20, 20, 'T');
  return s;
}

}  // namespace

TEST_CASE("prime list parsing") {
  CHECK(cli::parse_primes("3,5,7") == std::vector<std::int64_t>{3, 5, 7});
  CHECK_THROWS_AS(cli::parse_primes("2"), UsageError);
  CHECK_THROWS_AS(cli::parse_primes("3,x"), UsageError);
  CHECK_THROWS_AS(cli::parse_primes(""), UsageError);
}

TEST_CASE("census command is idempotent") {
  const auto dir = fresh_dir("census");
  auto first = invoke({"census", "--primes", "3", "--cache", dir.string()});
  CHECK(first.code == cli::kOk);
  CHECK(fs::exists(dir / "genus2_p3.csv"));
  CHECK(fs::exists(dir / "elliptic_q3.csv"));
  CHECK(fs::exists(dir / "elliptic_q9.csv"));
  CHECK(first.out.find("built") != std::string::npos);
  CHECK(first.out.find("product=9 ok") != std::string::npos);

  auto again = invoke({"census", "--primes", "3", "--cache", dir.string()});
  CHECK(again.code == cli::kOk);
  CHECK(again.out.find("built") == std::string::npos);
  CHECK(again.out.find("cached") != std::string::npos);

  CHECK(invoke({"census", "--primes", "2", "--cache", dir.string()}).code == cli::kUsage);
}

TEST_CASE("trace command") {
  const auto dir = fresh_dir("trace");
  auto csv = invoke({"trace", "--k1", "8", "--k2", "6", "--primes", "3,5,7", "--cache", dir.string(), "--format", "csv",
                     "--auto-census"});
  CHECK(csv.code == cli::kOk);
  std::istringstream lines(csv.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 4);

  auto json = invoke({"trace", "--max-weight-sum", "16", "--primes", "3", "--cache", dir.string()});
  CHECK(json.code == cli::kOk);
  const auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed.is_array());
  CHECK(parsed.size() == 10);
  CHECK(parsed[0]["provenance"].contains("censusGenus2"));

  auto repeat = invoke({"trace", "--max-weight-sum", "16", "--primes", "3", "--cache", dir.string()});
  CHECK(strip_timestamp(repeat.out) == strip_timestamp(json.out));
}

TEST_CASE("trace command errors") {
  const auto dir = fresh_dir("errors");
  CHECK(invoke({"trace", "--k1", "7", "--k2", "4", "--primes", "3", "--cache", dir.string(), "--auto-census"}).code ==
        cli::kUsage);
  CHECK(!fs::exists(dir));
  CHECK(invoke({"trace", "--k1", "8", "--k2", "6", "--primes", "3", "--cache", dir.string()}).code == cli::kCache);
  CHECK(invoke({"trace", "--primes", "3"}).code == cli::kUsage);
  CHECK(invoke({"bogus"}).code == cli::kUsage);

  auto odd = invoke({"trace", "--k1", "14", "--k2", "8", "--primes", "3", "--cache", dir.string(), "--auto-census",
                     "--normalization", "7"});
  CHECK(odd.code == cli::kConsistency);
  CHECK(odd.err.find("divisibility failure") != std::string::npos);
}

TEST_CASE("selftest") {
  const auto dir = fresh_dir("selftest");
  auto ok = invoke({"selftest", "--cache", dir.string()});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  auto budget = invoke({"selftest", "--cache", dir.string(), "--char-max-sum", "14", "--oracle-budget", "12"});
  CHECK(budget.code == cli::kOk);
  CHECK(budget.out.find("notice: skipped (13,0)") != std::string::npos);

  {
    const auto path = dir / "elliptic_q5.csv";
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    std::string text = s.str();
    text.back() = 'x';
    std::ofstream(path) << text;
  }
  auto broken = invoke({"selftest", "--cache", dir.string()});
  CHECK(broken.code != cli::kOk);
  CHECK(broken.out.find("FAIL mass identities") != std::string::npos);
}
