#include "siegel/modform.hpp"

#include <string>

#include "siegel/error.hpp"

namespace siegel {

namespace {

mpz_class divisor_power_sum(int n, unsigned power) {
  mpz_class s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) {
      mpz_class term;
      mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), power);
      s += term;
    }
  }
  return s;
}

QExpansion power(const QExpansion& f, int e, int precision) {
  QExpansion out(static_cast<std::size_t>(precision) + 1, 0);
  out[0] = 1;
  for (int i = 0; i < e; ++i) out = multiply(out, f, precision);
  return out;
}

}  // namespace

int dim_cusp_sl2(int k) {
  if (k < 4 || k % 2 != 0) return 0;
  return k % 12 == 2 ? k / 12 - 1 : k / 12;
}

QExpansion multiply(const QExpansion& f, const QExpansion& g, int precision) {
  QExpansion out(static_cast<std::size_t>(precision) + 1, 0);
  for (int i = 0; i <= precision && i < static_cast<int>(f.size()); ++i) {
    if (f[i] == 0) continue;
    for (int j = 0; i + j <= precision && j < static_cast<int>(g.size()); ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

QExpansion eisenstein_e4(int precision) {
  QExpansion e(static_cast<std::size_t>(precision) + 1);
  e[0] = 1;
  for (int n = 1; n <= precision; ++n) e[n] = 240 * divisor_power_sum(n, 3);
  return e;
}

QExpansion eisenstein_e6(int precision) {
  QExpansion e(static_cast<std::size_t>(precision) + 1);
  e[0] = 1;
  for (int n = 1; n <= precision; ++n) e[n] = -504 * divisor_power_sum(n, 5);
  return e;
}

QExpansion delta(int precision) {
  const auto e4 = eisenstein_e4(precision);
  const auto e6 = eisenstein_e6(precision);
  const auto e4cube = multiply(multiply(e4, e4, precision), e4, precision);
  const auto e6sq = multiply(e6, e6, precision);
  QExpansion d(static_cast<std::size_t>(precision) + 1);
  for (int n = 0; n <= precision; ++n) {
    const mpz_class diff = e4cube[n] - e6sq[n];
    if (!mpz_divisible_ui_p(diff.get_mpz_t(), 1728)) throw ConsistencyError("E4^3 - E6^2 not divisible by 1728");
    d[n] = diff / 1728;
  }
  return d;
}

std::vector<std::vector<mpq_class>> cusp_basis(int k, int precision) {
  const int d = dim_cusp_sl2(k);
  if (d == 0) return {};
  const auto e4 = eisenstein_e4(precision);
  const auto e6 = eisenstein_e6(precision);
  const auto dl = delta(precision);

  // Delta * E4^a * E6^b with 4a + 6b = k - 12; there are exactly dim S_k of them.
  std::vector<std::vector<mpq_class>> rows;
  const int w = k - 12;
  for (int b = 0; 6 * b <= w; ++b) {
    if ((w - 6 * b) % 4 != 0) continue;
    const int a = (w - 6 * b) / 4;
    const auto f = multiply(multiply(power(e4, a, precision), power(e6, b, precision), precision), dl, precision);
    rows.emplace_back(f.begin(), f.end());
  }
  if (static_cast<int>(rows.size()) != d) throw ConsistencyError("monomial count differs from dim S_k");

  // Reduced echelon form on the columns q^1..q^d.
  for (int col = 1; col <= d; ++col) {
    const int r = col - 1;
    int pivot = r;
    while (pivot < d && rows[pivot][col] == 0) ++pivot;
    if (pivot == d) throw ConsistencyError("cusp form monomials are not independent in weight " + std::to_string(k));
    std::swap(rows[r], rows[pivot]);
    const mpq_class lead = rows[r][col];
    for (auto& c : rows[r]) c /= lead;
    for (int other = 0; other < d; ++other) {
      if (other == r || rows[other][col] == 0) continue;
      const mpq_class factor = rows[other][col];
      for (int i = 0; i <= precision; ++i) rows[other][i] -= factor * rows[r][i];
    }
  }
  return rows;
}

mpz_class trace_hecke_sl2(int k, std::int64_t p) {
  if (k < 4 || k % 2 != 0) throw UsageError("Hecke trace needs even weight k >= 4, got " + std::to_string(k));
  if (p < 2 || !is_prime(p)) throw UsageError("Hecke trace needs a prime, got " + std::to_string(p));
  const int d = dim_cusp_sl2(k);
  if (d == 0) return 0;

  const int precision = static_cast<int>(p) * (d + 1);
  const auto basis = cusp_basis(k, precision);
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k - 1));

  mpq_class trace = 0;
  for (int i = 0; i < d; ++i) {
    // Coefficient of q^(i+1) in T_p f_i, which is the diagonal entry in the echelon basis.
    const int n = i + 1;
    mpq_class c = basis[i][static_cast<std::size_t>(n * p)];
    if (n % p == 0) c += pk * basis[i][static_cast<std::size_t>(n / p)];
    trace += c;
  }
  if (trace.get_den() != 1) throw ConsistencyError("non-integral Hecke trace in weight " + std::to_string(k));
  return trace.get_num();
}

mpz_class sym_power_trace(int n, std::int64_t a, std::int64_t q) {
  if (n < 0) throw UsageError("symmetric power must be non-negative");
  mpz_class prev = 1, cur = a;
  if (n == 0) return prev;
  for (int j = 1; j < n; ++j) {
    mpz_class next = a * cur - q * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

mpz_class trace_ec_a1(int n, const EllipticCensus& census) {
  if (n < 0) throw UsageError("trace_ec_a1 needs n >= 0");
  mpz_class sum = 0;
  for (const auto& [a, count] : census.counts) sum += count * sym_power_trace(n, a, census.q);
  const mpq_class value(sum, mpz_class(census.normalizer));
  mpq_class reduced = value;
  reduced.canonicalize();
  if (reduced.get_den() != 1) {
    throw ConsistencyError("elliptic Lefschetz sum for Sym^" + std::to_string(n) + " over F_" +
                           std::to_string(census.q) + " is not integral: " + reduced.get_str());
  }
  return reduced.get_num();
}

}  // namespace siegel
