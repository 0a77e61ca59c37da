#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <set>

#include "siegel/cli.hpp"
#include "siegel/error.hpp"
#include "siegel/ff.hpp"
#include "siegel/modform.hpp"
#include "siegel/oracle/freudenthal.hpp"
#include "siegel/oracle/gfq.hpp"
#include "siegel/oracle/groupoid.hpp"
#include "siegel/sp4char.hpp"

namespace siegel::cli {

namespace {

constexpr std::int64_t kSelftestPrimes[] = {3, 5};

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      result_.passed = false;
      result_.failures.push_back(what);
    }
  }
  void notice(std::string text) { result_.notices.push_back(std::move(text)); }
  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string str(const mpz_class& v) { return v.get_str(); }

SuiteResult field_characters() {
  Suite s("field characters");
  for (auto p : kSelftestPrimes) {
    const PrimeField f(p);
    const oracle::SmallField ref(static_cast<int>(p), 1);
    int residues = 0;
    for (int a = 0; a < p; ++a) {
      s.expect(f.chi(a) == ref.chi(a), "chi_" + std::to_string(p) + "(" + std::to_string(a) + ") disagrees with Euler");
      if (f.chi(a) == 1) ++residues;
      for (int b = 0; b < p; ++b) {
        s.expect(f.chi(f.mul(a, b)) == f.chi(a) * f.chi(b), "chi_" + std::to_string(p) + " not multiplicative");
      }
    }
    s.expect(residues == (p - 1) / 2, "wrong number of residues mod " + std::to_string(p));

    const QuadExtField f2(f);
    int ext_residues = 0;
    for (int i = 0; i < f2.order(); ++i) {
      const auto x = f2.element(i);
      const int expect = i == 0 ? 0 : f.chi(f2.norm(x));
      s.expect(f2.chi(x) == expect, "chi on F_p^2 differs from chi(norm) at " + std::to_string(i));
      if (f2.chi(x) == 1) ++ext_residues;
    }
    s.expect(ext_residues == (p * p - 1) / 2, "wrong number of residues in F_p^2");
  }
  return s.take();
}

SuiteResult mass_identities(const std::map<std::int64_t, CensusSet>& sets, const std::map<std::int64_t, std::string>& broken) {
  Suite s("mass identities");
  for (const auto& [p, why] : broken) s.expect(false, "p=" + std::to_string(p) + ": " + why);
  for (const auto& [p, set] : sets) {
    for (const auto* e : {&set.elliptic_p, &set.elliptic_p2}) {
      const std::string problem = verify_census(*e);
      s.expect(problem.empty(), "elliptic q=" + std::to_string(e->q) + ": " + problem);
      s.expect(e->mass() == mpq_class(e->q), "elliptic q=" + std::to_string(e->q) + " mass");
    }
    const std::string problem = verify_census(set.genus2);
    s.expect(problem.empty(), "genus2 p=" + std::to_string(p) + ": " + problem);
    s.expect(set.genus2.mass() == mpq_class(p * p * p), "genus2 p=" + std::to_string(p) + " mass");
    const mpq_class product = (set.elliptic_p.mass() * set.elliptic_p.mass() + set.elliptic_p2.mass()) / 2;
    s.expect(product == mpq_class(p * p), "product locus p=" + std::to_string(p) + " mass");
  }
  return s.take();
}

SuiteResult orbit_stabiliser(const std::map<std::int64_t, CensusSet>& sets) {
  Suite s("orbit-stabiliser oracle p=3");
  const auto it = sets.find(3);
  if (it == sets.end()) {
    s.expect(false, "p=3 census unavailable");
    return s.take();
  }
  const CensusTable& census = it->second.genus2;
  const auto groupoid = oracle::genus2_groupoid(3);
  s.expect(groupoid.group_order == census.normalizer, "group order differs from census normalizer");
  s.expect(groupoid.models == census.total, "model counts differ");
  std::set<std::pair<std::int64_t, std::int64_t>> keys;
  for (const auto& [k, v] : groupoid.mass) keys.insert(k);
  for (const auto& [k, v] : census.counts) keys.insert(k);
  for (const auto& k : keys) {
    mpq_class expect(census.count(k.first, k.second), census.normalizer);
    expect.canonicalize();
    const auto g = groupoid.mass.find(k);
    const mpq_class got = g == groupoid.mass.end() ? mpq_class(0) : g->second;
    s.expect(got == expect, "class (" + std::to_string(k.first) + "," + std::to_string(k.second) +
                                ") mass " + got.get_str() + " vs census " + expect.get_str());
  }

  for (int k = 1; k <= 2; ++k) {
    const auto eg = oracle::elliptic_groupoid(3, k);
    const EllipticCensus& ec = k == 1 ? it->second.elliptic_p : it->second.elliptic_p2;
    for (const auto& [a, m] : eg.mass) {
      mpq_class expect(ec.count(a), ec.normalizer);
      expect.canonicalize();
      s.expect(m == expect, "elliptic q=" + std::to_string(eg.q) + " trace " + std::to_string(a));
    }
  }
  return s.take();
}

SuiteResult character_agreement(const RunConfig& config) {
  Suite s("character vs Freudenthal");
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> coeff(-40, 40);
  std::uniform_int_distribution<int> prime(1, 40);
  for (int total = 0; total <= config.char_max_sum; ++total) {
    for (int m = 0; 2 * m <= total; ++m) {
      const int l = total - m;
      if (total > config.oracle_budget || total > 24) {
        s.notice("skipped (" + std::to_string(l) + "," + std::to_string(m) + "): exceeds oracle budget " +
                 std::to_string(std::min(config.oracle_budget, 24)));
        continue;
      }
      const auto poly = oracle::sp4_character_polynomial(l, m);
      const auto sys = LocalSystem::of(l, m);
      s.expect(poly.dimension() == weyl_dimension(sys), "dimension of (" + std::to_string(l) + "," + std::to_string(m) + ")");
      for (int trial = 0; trial < 50; ++trial) {
        const mpz_class a1 = coeff(rng), a2 = coeff(rng), p = prime(rng);
        if (poly.evaluate(a1, a2, p) != sp4_trace(sys, a1, a2, p)) {
          s.expect(false, "trace of (" + std::to_string(l) + "," + std::to_string(m) + ") at (" + str(a1) + "," +
                              str(a2) + "," + str(p) + ")");
          break;
        }
      }
    }
  }
  return s.take();
}

SuiteResult eichler_shimura(const std::map<std::int64_t, CensusSet>& sets) {
  Suite s("Eichler-Shimura");
  for (const auto& [p, set] : sets) {
    for (int n = 2; n <= 20; n += 2) {
      const mpz_class lhs = trace_ec_a1(n, set.elliptic_p);
      const mpz_class rhs = -trace_hecke_sl2(n + 2, p) - 1;
      s.expect(lhs == rhs, "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " + str(lhs) + " vs " + str(rhs));
    }
  }
  return s.take();
}

SuiteResult parity(const std::map<std::int64_t, CensusSet>& sets) {
  Suite s("parity vanishing");
  bool rejected = false;
  try {
    WeightPair::of(7, 4);
  } catch (const UsageError&) {
    rejected = true;
  }
  s.expect(rejected, "odd weight sum (7,4) accepted");
  for (const auto& [p, set] : sets) {
    for (int total = 1; total <= 21; total += 2) {
      for (int m = 0; 2 * m <= total; ++m) {
        const auto sys = LocalSystem::of(total - m, m);
        s.expect(trace_ec_a2(sys, set) == 0,
                 "odd system (" + std::to_string(sys.l) + "," + std::to_string(sys.m) + ") p=" + std::to_string(p));
      }
    }
    for (int n = 1; n <= 19; n += 2) s.expect(trace_ec_a1(n, set.elliptic_p) == 0, "odd Sym^" + std::to_string(n));
  }
  return s.take();
}

SuiteResult dim_zero(const RunConfig& config, const std::map<std::int64_t, CensusSet>& sets) {
  Suite s("dimension-zero weights");
  for (const auto& [p, set] : sets) {
    for (const auto& w : regular_weights(config.dim0_max_sum)) {
      const TraceReport r = hecke_trace_genus2(w, set, config.normalization);
      s.expect(r.four_times_trace == 0, "(" + std::to_string(w.k1) + "," + std::to_string(w.k2) +
                                            ") p=" + std::to_string(p) + " trace " + str(r.four_times_trace));
    }
  }
  return s.take();
}

SuiteResult second_row_forms(const std::map<std::int64_t, CensusSet>& sets) {
  Suite s("second-row closed forms");
  for (const auto& [p, set] : sets) {
    const std::string at = " p=" + std::to_string(p);
    s.expect(second_row(WeightPair::of(6, 4), set.elliptic_p) == 0, "(6,4)" + at);
    s.expect(second_row(WeightPair::of(7, 5), set.elliptic_p) == 1, "(7,5)" + at);
    s.expect(second_row(WeightPair::of(8, 6), set.elliptic_p) == -mpz_class(p * p * p * p), "(8,6)" + at);
    s.expect(trace_ec_a2(LocalSystem::of(0, 0), set) == mpz_class(p * p * p + p * p), "trivial system" + at);
  }
  return s.take();
}

}  // namespace

std::vector<SuiteResult> run_selftest(const RunConfig& config, std::ostream& err) {
  std::map<std::int64_t, CensusSet> sets;
  std::map<std::int64_t, std::string> broken;
  for (auto p : kSelftestPrimes) {
    try {
      sets.emplace(p, obtain_census_set(p, config.cache_dir, true, false, config.workers, err));
    } catch (const std::exception& e) {
      broken[p] = e.what();
    }
  }

  std::vector<SuiteResult> results;
  auto guarded = [&](const std::string& name, const std::function<SuiteResult()>& body) {
    try {
      results.push_back(body());
    } catch (const std::exception& e) {
      results.push_back({name, false, {std::string("exception: ") + e.what()}, {}});
    }
  };
  guarded("field characters", field_characters);
  guarded("mass identities", [&] { return mass_identities(sets, broken); });
  guarded("orbit-stabiliser oracle p=3", [&] { return orbit_stabiliser(sets); });
  guarded("character vs Freudenthal", [&] { return character_agreement(config); });
  guarded("Eichler-Shimura", [&] { return eichler_shimura(sets); });
  guarded("parity vanishing", [&] { return parity(sets); });
  guarded("dimension-zero weights", [&] { return dim_zero(config, sets); });
  guarded("second-row closed forms", [&] { return second_row_forms(sets); });
  return results;
}

int cmd_selftest(const RunConfig& config, std::ostream& out, std::ostream& err) {
  config.validate();
  const auto results = run_selftest(config, err);
  bool ok = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << "\n";
    for (const auto& n : r.notices) out << "  notice: " << n << "\n";
    for (const auto& f : r.failures) out << "  " << f << "\n";
    ok = ok && r.passed;
  }
  return ok ? kOk : kConsistency;
}

}  // namespace siegel::cli
