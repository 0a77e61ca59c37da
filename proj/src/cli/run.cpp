#include <ostream>

#include "CLI11.hpp"
#include "siegel/cli.hpp"
#include "siegel/error.hpp"

namespace siegel::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hecke traces on genus-2 vector-valued Siegel cusp forms from point counts"};
  app.require_subcommand(1);

  RunConfig config;
  std::string primes, cache;
  int k1 = 0, k2 = 0, max_sum = 0, workers = 1;
  std::string output;

  auto add_cache = [&](CLI::App* cmd) {
    cmd->add_option("--cache", cache, std::string("census cache directory (default $") + kCacheEnv + " or ./siegel-cache)");
    cmd->add_option("--workers", workers, "census worker threads")->check(CLI::PositiveNumber);
  };

  auto* census = app.add_subcommand("census", "build or refresh census caches");
  census->add_option("--primes", primes, "comma separated odd primes")->required();
  add_cache(census);

  auto* trace = app.add_subcommand("trace", "trace of T(p) for weights and primes");
  auto* k1_opt = trace->add_option("--k1", k1, "first weight");
  auto* k2_opt = trace->add_option("--k2", k2, "second weight");
  auto* sum_opt = trace->add_option("--max-weight-sum", max_sum, "all regular weights with k1 + k2 <= S");
  k1_opt->needs(k2_opt);
  k2_opt->needs(k1_opt);
  sum_opt->excludes(k1_opt)->excludes(k2_opt);
  trace->add_option("--primes", primes, "comma separated odd primes")->required();
  trace->add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  trace->add_option("--normalization", config.normalization, "divisor applied to the assembled trace");
  trace->add_flag("--auto-census", config.auto_census, "build missing censuses");
  trace->add_option("--output", output, "write the report here instead of stdout");
  add_cache(trace);

  auto* selftest = app.add_subcommand("selftest", "run the invariant battery on p = 3, 5");
  selftest->add_option("--char-max-sum", config.char_max_sum, "character check for l + m up to this");
  selftest->add_option("--oracle-budget", config.oracle_budget, "largest l + m handed to the Freudenthal oracle");
  selftest->add_option("--dim0-max-sum", config.dim0_max_sum, "weights with k1 + k2 up to this must have zero trace");
  add_cache(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    config.cache_dir = cache.empty() ? default_cache_dir() : std::filesystem::path(cache);
    config.workers = static_cast<unsigned>(workers);
    if (!primes.empty()) config.primes = parse_primes(primes);
    if (!output.empty()) config.output = output;

    if (census->parsed()) return cmd_census(config, out, err);
    if (trace->parsed()) {
      if (k1_opt->count() > 0) {
        config.weights.push_back(WeightPair::of(k1, k2));
      } else if (sum_opt->count() > 0) {
        config.weights = regular_weights(max_sum);
        if (config.weights.empty()) throw UsageError("no regular weights with k1 + k2 <= " + std::to_string(max_sum));
      } else {
        throw UsageError("give --k1 and --k2 or --max-weight-sum");
      }
      return cmd_trace(config, out, err);
    }
    return cmd_selftest(config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const CacheError& e) {
    err << "cache error: " << e.what() << "\n";
    return kCache;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << "\n";
    return kConsistency;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "cache error: " << e.what() << "\n";
    return kCache;
  }
}

}  // namespace siegel::cli
