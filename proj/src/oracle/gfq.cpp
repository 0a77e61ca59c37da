#include "siegel/oracle/gfq.hpp"

#include <array>
#include <stdexcept>

namespace siegel::oracle {

namespace {

using Coeffs = std::array<int, 3>;

Coeffs digits(int index, int p) {
  Coeffs c{};
  for (int i = 0; i < 3; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

int from_digits(const Coeffs& c, int p) { return c[0] + p * (c[1] + p * c[2]); }

}  // namespace

SmallField::SmallField(int p, int k) : p_(p), k_(k), q_(1) {
  if (k < 1 || k > 3) throw std::invalid_argument("SmallField supports degrees 1..3");
  for (int i = 0; i < k; ++i) q_ *= p;

  // Monic modulus x^k + m2 x^2 + m1 x + m0 without roots in F_p (irreducible for k <= 3).
  std::array<int, 3> modulus{};
  if (k > 1) {
    bool found = false;
    for (int idx = 0; idx < q_ && !found; ++idx) {
      const Coeffs m = digits(idx, p);
      bool has_root = false;
      for (int x = 0; x < p && !has_root; ++x) {
        long v = 1;
        for (int i = 0; i < k; ++i) v = v * x % p;
        long xi = 1;
        for (int i = 0; i < k; ++i) {
          v = (v + m[i] * xi) % p;
          xi = xi * x % p;
        }
        has_root = v == 0;
      }
      if (!has_root) {
        modulus = m;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible modulus found");
  }

  const auto qq = static_cast<std::size_t>(q_);
  add_.resize(qq * qq);
  mul_.resize(qq * qq);
  neg_.resize(qq);
  inv_.assign(qq, 0);
  for (int a = 0; a < q_; ++a) {
    const Coeffs ca = digits(a, p);
    Coeffs cn{};
    for (int i = 0; i < 3; ++i) cn[i] = (p - ca[i]) % p;
    neg_[a] = from_digits(cn, p);
    for (int b = 0; b < q_; ++b) {
      const Coeffs cb = digits(b, p);
      Coeffs s{};
      for (int i = 0; i < 3; ++i) s[i] = (ca[i] + cb[i]) % p;
      add_[static_cast<std::size_t>(a) * q_ + b] = from_digits(s, p);

      std::array<long, 5> prod{};
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] += static_cast<long>(ca[i]) * cb[j];
      for (int d = 2 * k - 2; d >= k; --d) {
        const long c = prod[d] % p;
        prod[d] = 0;
        for (int i = 0; i < k; ++i) prod[d - k + i] -= c * modulus[i];
      }
      Coeffs r{};
      for (int i = 0; i < k; ++i) r[i] = static_cast<int>(((prod[i] % p) + p) % p);
      mul_[static_cast<std::size_t>(a) * q_ + b] = from_digits(r, p);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) inv_[a] = b;
}

int SmallField::pow(int a, std::int64_t e) const {
  int result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

int SmallField::chi(int a) const {
  if (a == 0) return 0;
  return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

}  // namespace siegel::oracle
