#include <cstdlib>
#include <ctime>
#include <sstream>

#include "siegel/cli.hpp"
#include "siegel/error.hpp"
#include "siegel/ff.hpp"

namespace siegel::cli {

void RunConfig::validate() const {
  for (auto p : primes) {
    if (p < 3 || !is_prime(p)) throw UsageError("not an odd prime: " + std::to_string(p));
  }
  if (workers < 1) throw UsageError("worker count must be at least 1");
  if (format != "json" && format != "csv") throw UsageError("format must be json or csv");
  if (normalization < 1) throw UsageError("normalization factor must be positive");
}

std::vector<std::int64_t> parse_primes(const std::string& list) {
  std::vector<std::int64_t> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    std::int64_t p = 0;
    try {
      p = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer: " + item);
    }
    if (used != item.size()) throw UsageError("not an integer: " + item);
    if (p < 3 || !is_prime(p)) throw UsageError("not an odd prime: " + item);
    out.push_back(p);
  }
  if (out.empty()) throw UsageError("empty prime list");
  return out;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv(kCacheEnv); env != nullptr && *env != '\0') return env;
  return "siegel-cache";
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace siegel::cli
