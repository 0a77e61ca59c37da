#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "siegel/trace.hpp"

namespace siegel::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kCache = 3, kConsistency = 4 };

inline constexpr const char* kCacheEnv = "SIEGEL_CACHE";

struct RunConfig {
  std::vector<std::int64_t> primes;
  std::vector<WeightPair> weights;
  std::filesystem::path cache_dir;
  std::string format = "json";
  unsigned workers = 1;
  int normalization = 4;
  bool auto_census = false;
  std::optional<std::filesystem::path> output;
  int dim0_max_sum = 14;     // weights with k1 + k2 <= this must have zero trace
  int char_max_sum = 12;     // selftest: character check for l + m <= this
  int oracle_budget = 24;    // Freudenthal oracle refuses l + m beyond this

  /// Throws UsageError on a non-prime, a non-positive worker count or a bad format.
  void validate() const;
};

/// Comma separated list of odd primes; throws UsageError.
std::vector<std::int64_t> parse_primes(const std::string& list);

/// $SIEGEL_CACHE if set, otherwise ./siegel-cache.
std::filesystem::path default_cache_dir();

/// One cache file and how it was obtained.
struct CensusStatus {
  std::string locus;
  std::int64_t q = 0;
  std::filesystem::path path;
  bool reused = false;
  std::string checksum;
};

/// Loads the three censuses for p from dir. Missing files are built when build is set,
/// otherwise CacheError. Corrupt files are rebuilt when refresh is set, otherwise CacheError.
CensusSet obtain_census_set(std::int64_t p, const std::filesystem::path& dir, bool build, bool refresh,
                            unsigned workers, std::ostream& log, std::vector<CensusStatus>* status = nullptr);

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

int cmd_census(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_trace(const RunConfig& config, std::ostream& out, std::ostream& err);

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;
  std::vector<std::string> notices;
};

std::vector<SuiteResult> run_selftest(const RunConfig& config, std::ostream& err);
int cmd_selftest(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace siegel::cli
