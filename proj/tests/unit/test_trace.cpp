#include <map>

#include "doctest.h"
#include "siegel/error.hpp"
#include "siegel/ff.hpp"
#include "siegel/modform.hpp"
#include "siegel/trace.hpp"

using namespace siegel;

namespace {

const CensusSet& censuses(std::int64_t p) {
  static std::map<std::int64_t, CensusSet> cache;
  auto it = cache.find(p);
  if (it == cache.end()) {
    const PrimeField f(p);
    it = cache.emplace(p, CensusSet{genus2_census(f), elliptic_census(f), elliptic_census(QuadExtField(f))}).first;
  }
  return it->second;
}

}  // namespace

TEST_CASE("weight domain") {
  CHECK_THROWS_AS(WeightPair::of(7, 4), UsageError);
  CHECK_THROWS_AS(WeightPair::of(6, 6), UsageError);
  CHECK_THROWS_AS(WeightPair::of(5, 3), UsageError);
  const auto w = WeightPair::of(14, 8);
  CHECK(w.r1() == 20);
  CHECK(w.r2() == 8);
  CHECK(w.local_system() == LocalSystem{11, 5});
  for (const auto& v : regular_weights(24)) {
    CHECK(v.k1 > v.k2);
    CHECK(v.k2 > 3);
    CHECK((v.k1 + v.k2) % 2 == 0);
  }
  CHECK(regular_weights(12).size() == 3);  // (6,4) (7,5) (8,4)
}

TEST_CASE("product locus") {
  for (std::int64_t p : {3, 5, 7}) {
    const auto& c = censuses(p);
    CHECK(product_locus_trace(LocalSystem::of(0, 0), c.elliptic_p, c.elliptic_p2) == mpq_class(p * p));
    CHECK(product_locus_trace(LocalSystem::of(1, 0), c.elliptic_p, c.elliptic_p2) == 0);
    CHECK(product_locus_trace(LocalSystem::of(4, 1), c.elliptic_p, c.elliptic_p2) == 0);
  }
}

TEST_CASE("trivial local system") {
  for (std::int64_t p : {3, 5, 7}) {
    CHECK(trace_ec_a2(LocalSystem::of(0, 0), censuses(p)) == mpz_class(p * p * p + p * p));
    CHECK(jacobian_locus_trace(LocalSystem::of(0, 0), censuses(p).genus2) == mpq_class(p * p * p));
  }
}

TEST_CASE("odd systems vanish") {
  for (int l = 1; l <= 9; ++l)
    for (int m = 0; m <= l; ++m)
      if ((l + m) % 2 == 1) CHECK(trace_ec_a2(LocalSystem::of(l, m), censuses(5)) == 0);
}

TEST_CASE("second row closed forms") {
  for (std::int64_t p : {3, 5, 7}) {
    const auto& e = censuses(p).elliptic_p;
    CHECK(second_row(WeightPair::of(6, 4), e) == 0);
    CHECK(second_row(WeightPair::of(7, 5), e) == 1);
    CHECK(second_row(WeightPair::of(8, 6), e) == -mpz_class(p * p * p * p));
  }
}

TEST_CASE("endoscopic term") {
  for (std::int64_t p : {3, 5, 7}) {
    CHECK(endoscopic_term(WeightPair::of(8, 6), p) == 0);
    CHECK(endoscopic_term(WeightPair::of(14, 8), p) == 0);
  }
  CHECK(endoscopic_term(WeightPair::of(17, 7), 3) == 61236);
}

TEST_CASE("dimension-zero weights have zero trace") {
  for (std::int64_t p : {3, 5, 7})
    for (const auto& w : regular_weights(14)) {
      const auto r = hecke_trace_genus2(w, censuses(p));
      CHECK(r.four_times_trace == 0);
      REQUIRE(r.hecke_trace);
      CHECK(*r.hecke_trace == 0);
    }
}

TEST_CASE("report bookkeeping") {
  const auto r = hecke_trace_genus2(WeightPair::of(14, 8), censuses(3));
  CHECK(r.trace_a2 == r.jacobian_term + r.product_term);
  CHECK(r.four_times_trace == -r.trace_a2 + r.second_row);
  CHECK(r.eisenstein_term == r.second_row + r.endoscopic_term);
  CHECK(r.four_times_trace == -27000);
  CHECK(r.divisible);

  const auto one = hecke_trace_genus2(WeightPair::of(14, 8), censuses(3), 1);
  CHECK(*one.hecke_trace == -27000);
  const auto seven = hecke_trace_genus2(WeightPair::of(14, 8), censuses(3), 7);
  CHECK(!seven.divisible);
  CHECK(!seven.hecke_trace);
  CHECK_THROWS_AS(require_consistent(seven), ConsistencyError);
}

TEST_CASE("mismatched census set") {
  CensusSet mixed{censuses(3).genus2, censuses(5).elliptic_p, censuses(3).elliptic_p2};
  CHECK_THROWS_AS(mixed.check(), UsageError);
}
