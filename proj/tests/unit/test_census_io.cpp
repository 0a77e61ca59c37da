#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "doctest.h"
#include "siegel/census.hpp"
#include "siegel/census_io.hpp"
#include "siegel/error.hpp"
#include "siegel/ff.hpp"

using namespace siegel;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("siegel-io-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("genus-2 census round trip") {
  const auto t = genus2_census(PrimeField(3));
  const auto path = scratch("g3.csv");
  census_store(t, path);
  CHECK(census_load(path) == t);
  CHECK(census_checksum(path).size() == 64);

  census_store(t, path);
  const std::string first = slurp(path);
  census_store(t, path);
  CHECK(slurp(path) == first);
}

TEST_CASE("elliptic census round trip") {
  const auto e = elliptic_census(QuadExtField(PrimeField(3)));
  const auto path = scratch("e9.csv");
  census_store(e, path);
  CHECK(elliptic_census_load(path) == e);
  CHECK_THROWS_AS(census_load(path), CacheError);
}

TEST_CASE("tampered count is rejected") {
  const auto path = scratch("g3t.csv");
  census_store(genus2_census(PrimeField(3)), path);
  std::string text = slurp(path);
  const auto last = text.rfind(',');
  text.insert(last + 1, "1");
  spit(path, text);
  CHECK_THROWS_AS(census_load(path), CacheError);
}

TEST_CASE("wrong version is an explicit error") {
  const auto path = scratch("g3v.csv");
  census_store(genus2_census(PrimeField(3)), path);
  std::string text = slurp(path);
  const auto at = text.find("siegel-census,1,");
  REQUIRE(at != std::string::npos);
  text.replace(at, 16, "siegel-census,7,");
  spit(path, text);
  try {
    census_load(path);
    FAIL("version mismatch accepted");
  } catch (const CacheError& e) {
    CHECK(std::string(e.what()).find("version") != std::string::npos);
  }
}

TEST_CASE("missing file") { CHECK_THROWS_AS(census_load(scratch("absent.csv")), CacheError); }

TEST_CASE("cache paths") {
  CHECK(genus2_cache_path("d", 7).filename() == "genus2_p7.csv");
  CHECK(elliptic_cache_path("d", 49).filename() == "elliptic_q49.csv");
}
