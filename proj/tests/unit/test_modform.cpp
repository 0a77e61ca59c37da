#include "doctest.h"
#include "siegel/census.hpp"
#include "siegel/error.hpp"
#include "siegel/ff.hpp"
#include "siegel/modform.hpp"

using namespace siegel;

namespace {

// q prod (1 - q^n)^24 directly.
std::vector<mpz_class> delta_product(int precision) {
  std::vector<mpz_class> f(precision, 0);
  f[1] = 1;
  for (int n = 1; n < precision; ++n)
    for (int e = 0; e < 24; ++e)
      for (int i = precision - 1; i >= n; --i) f[i] -= f[i - n];
  return f;
}

// rank of the Delta * E4^a E6^b system, by row reduction over Q
int rank(std::vector<std::vector<mpq_class>> rows) {
  int r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("cusp form dimensions") {
  CHECK(dim_cusp_sl2(12) == 1);
  CHECK(dim_cusp_sl2(14) == 0);
  CHECK(dim_cusp_sl2(11) == 0);
  CHECK(dim_cusp_sl2(24) == 2);
  CHECK(dim_cusp_sl2(2) == 0);
}

TEST_CASE("cusp form dimension equals the rank of an independent spanning set") {
  for (int k = 12; k <= 60; k += 2) {
    const int prec = 2 * k;
    std::vector<std::vector<mpq_class>> rows;
    const auto d = delta_product(prec);
    for (int a = 0; 4 * a <= k - 12; ++a)
      for (int b = 0; 4 * a + 6 * b <= k - 12; ++b) {
        if (4 * a + 6 * b != k - 12) continue;
        auto f = d;
        for (int i = 0; i < a; ++i) f = multiply(f, eisenstein_e4(prec), prec);
        for (int i = 0; i < b; ++i) f = multiply(f, eisenstein_e6(prec), prec);
        rows.emplace_back(f.begin(), f.end());
      }
    CHECK(rank(rows) == dim_cusp_sl2(k));
    CHECK(static_cast<int>(cusp_basis(k, prec).size()) == dim_cusp_sl2(k));
  }
}

TEST_CASE("delta agrees with the product formula") {
  const auto d = delta(40);
  const auto ref = delta_product(40);
  for (int n = 0; n < 40; ++n) CHECK(d[n] == ref[n]);
  CHECK(d[3] == 252);
  CHECK(d[5] == 4830);
}

TEST_CASE("Hecke traces on S_k") {
  CHECK(trace_hecke_sl2(12, 3) == 252);
  CHECK(trace_hecke_sl2(12, 5) == 4830);
  const auto ref = delta_product(8);
  CHECK(trace_hecke_sl2(12, 7) == ref[7]);
  for (std::int64_t p : {3, 5, 7, 11}) CHECK(trace_hecke_sl2(10, p) == 0);
  CHECK_THROWS_AS(trace_hecke_sl2(13, 3), UsageError);
}

TEST_CASE("Hecke traces obey the Deligne bound") {
  for (int k = 12; k <= 40; k += 2)
    for (std::int64_t p : {3, 5, 7}) {
      const mpz_class t = trace_hecke_sl2(k, p);
      // |tr| <= d * 2 p^((k-1)/2)
      mpz_class lhs = t * t, rhs;
      mpz_ui_pow_ui(rhs.get_mpz_t(), p, k - 1);
      rhs *= 4 * dim_cusp_sl2(k) * dim_cusp_sl2(k);
      CHECK(lhs <= rhs);
    }
}

TEST_CASE("symmetric power traces") {
  CHECK(sym_power_trace(0, 3, 5) == 1);
  CHECK(sym_power_trace(1, 3, 5) == 3);
  CHECK(sym_power_trace(2, 3, 5) == 9 - 5);
}

TEST_CASE("Lefschetz traces on A_1") {
  const auto e3 = elliptic_census(PrimeField(3));
  const auto e7 = elliptic_census(PrimeField(7));
  CHECK(trace_ec_a1(10, e3) == -253);
  CHECK(trace_ec_a1(2, e7) == -1);
  CHECK(trace_ec_a1(0, e3) == 3);
  for (int n = 1; n <= 15; n += 2) CHECK(trace_ec_a1(n, e7) == 0);
  for (int n = 2; n <= 20; n += 2) CHECK(trace_ec_a1(n, e7) == -trace_hecke_sl2(n + 2, 7) - 1);
}
