#include "siegel/sp4char.hpp"

#include <string>

#include "siegel/error.hpp"

namespace siegel {

LocalSystem LocalSystem::of(int l, int m) {
  if (m < 0 || l < m) {
    throw UsageError("local system needs l >= m >= 0, got (" + std::to_string(l) + ", " + std::to_string(m) + ")");
  }
  return {l, m};
}

std::int64_t weyl_dimension(const LocalSystem& sys) {
  const std::int64_t l = sys.l, m = sys.m;
  return (l - m + 1) * (m + 1) * (l + 2) * (l + m + 3) / 6;
}

std::vector<mpz_class> h_sequence(const mpz_class& a1, const mpz_class& a2, const mpz_class& p, int n) {
  if (n < 0) throw UsageError("h_sequence length must be non-negative");
  std::vector<mpz_class> h(static_cast<std::size_t>(n) + 1);
  const mpz_class pa1 = p * a1;
  const mpz_class p2 = p * p;
  auto at = [&h](int j) -> mpz_class { return j < 0 ? mpz_class(0) : h[static_cast<std::size_t>(j)]; };
  h[0] = 1;
  for (int j = 1; j <= n; ++j) {
    h[static_cast<std::size_t>(j)] = a1 * at(j - 1) - a2 * at(j - 2) + pa1 * at(j - 3) - p2 * at(j - 4);
  }
  return h;
}

std::vector<mpz_class> h_sequence(const FrobeniusClass& cls, int n) {
  return h_sequence(mpz_class(cls.a1), mpz_class(cls.a2), mpz_class(cls.p), n);
}

mpz_class sp4_trace(const LocalSystem& sys, const mpz_class& a1, const mpz_class& a2, const mpz_class& p) {
  const auto checked = LocalSystem::of(sys.l, sys.m);
  const auto h = h_sequence(a1, a2, p, checked.l + 1);
  auto at = [&h](int j) -> const mpz_class& {
    static const mpz_class zero = 0;
    return j < 0 ? zero : h[static_cast<std::size_t>(j)];
  };
  const int l = checked.l, m = checked.m;
  return at(l) * at(m) + p * at(l) * at(m - 2) - at(l + 1) * at(m - 1) - p * at(l - 1) * at(m - 1);
}

mpz_class sp4_trace(const LocalSystem& sys, const FrobeniusClass& cls) {
  return sp4_trace(sys, mpz_class(cls.a1), mpz_class(cls.a2), mpz_class(cls.p));
}

}  // namespace siegel
