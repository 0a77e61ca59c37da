#include <array>
#include <random>

#include "doctest.h"
#include "siegel/error.hpp"
#include "siegel/oracle/freudenthal.hpp"
#include "siegel/sp4char.hpp"

using namespace siegel;

namespace {

// Elementary symmetric functions of the roots of x^4 - a1 x^3 + a2 x^2 - p a1 x + p^2,
// and the complete homogeneous ones from Newton-type identities, by brute-force expansion
// over a small set of explicit "eigenvalues" with integer similitude: alpha, p/alpha, beta, p/beta.
struct Roots {
  mpq_class r[4];
};

Roots roots(const mpq_class& alpha, const mpq_class& beta, const mpq_class& p) {
  return {{alpha, p / alpha, beta, p / beta}};
}

mpq_class complete(const Roots& x, int j) {
  if (j < 0) return 0;
  mpq_class total = 0;
  for (int a = 0; a <= j; ++a)
    for (int b = 0; a + b <= j; ++b)
      for (int c = 0; a + b + c <= j; ++c) {
        const int d = j - a - b - c;
        mpq_class t = 1;
        for (int i = 0; i < a; ++i) t *= x.r[0];
        for (int i = 0; i < b; ++i) t *= x.r[1];
        for (int i = 0; i < c; ++i) t *= x.r[2];
        for (int i = 0; i < d; ++i) t *= x.r[3];
        total += t;
      }
  return total;
}

}  // namespace

TEST_CASE("local system domain") {
  CHECK_THROWS_AS(LocalSystem::of(1, 2), UsageError);
  CHECK_THROWS_AS(LocalSystem::of(3, -1), UsageError);
  CHECK(LocalSystem::of(4, 2).even());
  CHECK(!LocalSystem::of(3, 0).even());
}

TEST_CASE("H sequence against explicit eigenvalues") {
  const mpq_class alpha(3), beta(-2), p(6);
  const Roots x = roots(alpha, beta, p);
  const mpq_class a1 = x.r[0] + x.r[1] + x.r[2] + x.r[3];
  mpq_class a2 = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) a2 += x.r[i] * x.r[j];
  REQUIRE(a1.get_den() == 1);
  REQUIRE(a2.get_den() == 1);
  const auto h = h_sequence(a1.get_num(), a2.get_num(), 6, 8);
  for (int j = 0; j <= 8; ++j) CHECK(mpq_class(h[j]) == complete(x, j));
}

TEST_CASE("small representations") {
  const mpz_class a1 = 5, a2 = -7, p = 11;
  CHECK(sp4_trace(LocalSystem::of(0, 0), a1, a2, p) == 1);
  CHECK(sp4_trace(LocalSystem::of(1, 0), a1, a2, p) == a1);
  // Lambda^2 std = V_(1,1) + similitude
  CHECK(sp4_trace(LocalSystem::of(1, 1), a1, a2, p) == a2 - p);
  const auto h = h_sequence(a1, a2, p, 2);
  CHECK(sp4_trace(LocalSystem::of(2, 0), a1, a2, p) == h[2]);
}

TEST_CASE("Freudenthal multiplicities") {
  const auto std_rep = oracle::sp4_weight_multiplicities(1, 0);
  CHECK(std_rep.size() == 4);
  for (const auto& [w, m] : std_rep) CHECK(m == 1);

  std::int64_t dim = 0;
  for (const auto& [w, m] : oracle::sp4_weight_multiplicities(1, 1)) dim += m;
  CHECK(dim == 5);
  dim = 0;
  for (const auto& [w, m] : oracle::sp4_weight_multiplicities(2, 0)) dim += m;
  CHECK(dim == 10);
  CHECK_THROWS(oracle::sp4_weight_multiplicities(13, 12));
}

TEST_CASE("Weyl dimension") {
  CHECK(weyl_dimension(LocalSystem::of(3, 1)) == 35);
  for (int l = 0; l <= 24; ++l)
    for (int m = 0; m <= l && l + m <= 24; ++m) {
      const auto sys = LocalSystem::of(l, m);
      CHECK(sp4_trace(sys, 4, 6, 1) == weyl_dimension(sys));
      CHECK(oracle::sp4_character_polynomial(l, m).dimension() == weyl_dimension(sys));
    }
}

TEST_CASE("Jacobi-Trudi trace equals the Freudenthal character") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-30, 30);
  for (int l = 0; l <= 8; ++l)
    for (int m = 0; m <= l; ++m) {
      const auto poly = oracle::sp4_character_polynomial(l, m);
      for (int t = 0; t < 20; ++t) {
        const mpz_class a1 = d(rng), a2 = d(rng), p = 1 + (d(rng) + 30) % 17;
        CHECK(poly.evaluate(a1, a2, p) == sp4_trace(LocalSystem::of(l, m), a1, a2, p));
      }
    }
}
