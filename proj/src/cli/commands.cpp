#include <algorithm>
#include <fstream>
#include <ostream>
#include <tuple>

#include "siegel/census_io.hpp"
#include "siegel/cli.hpp"
#include "siegel/error.hpp"
#include "siegel/ff.hpp"
#include "siegel/report.hpp"

#ifndef SIEGEL_VERSION
#define SIEGEL_VERSION "unknown"
#endif

namespace siegel::cli {

namespace {

template <typename Table, typename Load, typename Build>
Table obtain(const std::filesystem::path& path, std::string locus, std::int64_t q, bool build, bool refresh,
             std::ostream& log, std::vector<CensusStatus>* status, Load load, Build make) {
  CensusStatus st{std::move(locus), q, path, false, {}};
  std::optional<Table> table;
  if (std::filesystem::exists(path)) {
    try {
      table = load(path);
      st.reused = true;
    } catch (const CacheError& e) {
      if (!refresh) throw;
      log << "refreshing " << path.string() << ": " << e.what() << "\n";
    }
  } else if (!build) {
    throw CacheError("missing census " + path.string() + " (run the census command or pass --auto-census)");
  }
  if (!table) {
    log << "building " << st.locus << " census over F_" << q << "\n";
    table = make();
    const std::string problem = verify_census(*table);
    if (!problem.empty()) throw ConsistencyError(st.locus + " census over F_" + std::to_string(q) + ": " + problem);
    census_store(*table, path);
  }
  st.checksum = census_checksum(path);
  if (status) status->push_back(st);
  return *table;
}

}  // namespace

CensusSet obtain_census_set(std::int64_t p, const std::filesystem::path& dir, bool build, bool refresh,
                            unsigned workers, std::ostream& log, std::vector<CensusStatus>* status) {
  const PrimeField field(p);
  const CensusOptions opts{workers};
  if (build || refresh) std::filesystem::create_directories(dir);
  auto load_elliptic = [](const std::filesystem::path& path) { return elliptic_census_load(path); };
  auto load_genus2 = [](const std::filesystem::path& path) { return census_load(path); };

  CensusSet set;
  set.elliptic_p = obtain<EllipticCensus>(elliptic_cache_path(dir, p), EllipticCensus::kLocus, p, build, refresh, log,
                                          status, load_elliptic, [&] { return elliptic_census(field, opts); });
  set.elliptic_p2 =
      obtain<EllipticCensus>(elliptic_cache_path(dir, p * p), EllipticCensus::kLocus, p * p, build, refresh, log, status,
                             load_elliptic, [&] { return elliptic_census(QuadExtField(field), opts); });
  set.genus2 = obtain<CensusTable>(genus2_cache_path(dir, p), CensusTable::kLocus, p, build, refresh, log, status,
                                   load_genus2, [&] { return genus2_census(field, opts); });
  set.check();
  return set;
}

int cmd_census(const RunConfig& config, std::ostream& out, std::ostream& err) {
  config.validate();
  if (config.primes.empty()) throw UsageError("no primes given");
  bool ok = true;
  for (auto p : config.primes) {
    std::vector<CensusStatus> status;
    CensusSet set;
    try {
      set = obtain_census_set(p, config.cache_dir, true, true, config.workers, err, &status);
    } catch (const ConsistencyError& e) {
      out << "p=" << p << " FAIL " << e.what() << "\n";
      ok = false;
      continue;
    }
    for (const auto& st : status) {
      out << "p=" << p << " " << st.locus << " q=" << st.q << " " << (st.reused ? "cached" : "built") << " "
          << st.checksum.substr(0, 16) << "\n";
    }
    const mpq_class product = (set.elliptic_p.mass() * set.elliptic_p.mass() + set.elliptic_p2.mass()) / 2;
    const bool product_ok = product == mpq_class(p * p);
    out << "p=" << p << " mass elliptic(F_p)=" << set.elliptic_p.mass() << " elliptic(F_p^2)=" << set.elliptic_p2.mass()
        << " genus2=" << set.genus2.mass() << " product=" << product << (product_ok ? " ok" : " FAIL") << "\n";
    ok = ok && product_ok;
  }
  return ok ? kOk : kConsistency;
}

int cmd_trace(const RunConfig& config, std::ostream& out, std::ostream& err) {
  config.validate();
  if (config.primes.empty()) throw UsageError("no primes given");
  if (config.weights.empty()) throw UsageError("no weights given");

  std::vector<TraceReport> reports;
  const std::string generated = utc_timestamp();
  for (auto p : config.primes) {
    std::vector<CensusStatus> status;
    const CensusSet set =
        obtain_census_set(p, config.cache_dir, config.auto_census, false, config.workers, err, &status);
    std::map<std::string, std::string> provenance{{"codeVersion", SIEGEL_VERSION}, {"generatedAt", generated}};
    for (const auto& st : status) {
      const std::string key = st.locus == CensusTable::kLocus ? "censusGenus2"
                              : st.q == p                     ? "censusEllipticP"
                                                              : "censusEllipticP2";
      provenance[key] = st.checksum;
    }
    for (const auto& w : config.weights) {
      TraceReport r = hecke_trace_genus2(w, set, config.normalization);
      r.provenance = provenance;
      reports.push_back(std::move(r));
    }
  }
  std::sort(reports.begin(), reports.end(), [](const TraceReport& a, const TraceReport& b) {
    return std::tie(a.weight.k1, a.weight.k2, a.p) < std::tie(b.weight.k1, b.weight.k2, b.p);
  });

  const std::string body = config.format == "csv" ? to_csv(reports) : to_json_array(reports);
  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file) throw CacheError("cannot write " + config.output->string());
    file << body;
  } else {
    out << body;
  }

  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.checks_passed()) {
      ++failed;
      err << "divisibility failure: (" << r.weight.k1 << "," << r.weight.k2 << ") p=" << r.p
          << " fourTimesTrace=" << r.four_times_trace << " not divisible by " << r.normalization << "\n";
    }
  }
  err << reports.size() << " reports, " << failed << " divisibility failures\n";
  return failed == 0 ? kOk : kConsistency;
}

}  // namespace siegel::cli
