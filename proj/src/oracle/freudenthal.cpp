#include "siegel/oracle/freudenthal.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace siegel::oracle {

namespace {

constexpr int kBudget = 24;
constexpr std::array<std::pair<int, int>, 4> kPositiveRoots{{{1, -1}, {1, 1}, {2, 0}, {0, 2}}};

int dot(std::pair<int, int> a, std::pair<int, int> b) { return a.first * b.first + a.second * b.second; }

// Dense Laurent polynomial in s1, s2 with exponents in [-r, r].
struct Laurent {
  int r = 0;
  std::vector<mpz_class> c;

  explicit Laurent(int radius) : r(radius), c(static_cast<std::size_t>((2 * radius + 1) * (2 * radius + 1))) {}
  mpz_class& at(int x, int y) { return c[static_cast<std::size_t>((x + r) * (2 * r + 1) + (y + r))]; }
  const mpz_class& at(int x, int y) const { return c[static_cast<std::size_t>((x + r) * (2 * r + 1) + (y + r))]; }

  Laurent times(const std::vector<std::pair<std::pair<int, int>, int>>& sparse) const {
    Laurent out(r);
    for (int x = -r; x <= r; ++x)
      for (int y = -r; y <= r; ++y) {
        const mpz_class& v = at(x, y);
        if (v == 0) continue;
        for (const auto& [e, coeff] : sparse) {
          const int nx = x + e.first, ny = y + e.second;
          if (std::abs(nx) > r || std::abs(ny) > r) throw std::logic_error("Laurent radius exceeded");
          out.at(nx, ny) += v * coeff;
        }
      }
    return out;
  }
};

}  // namespace

std::map<std::pair<int, int>, std::int64_t> sp4_weight_multiplicities(int l, int m) {
  if (m < 0 || l < m) throw std::invalid_argument("highest weight must satisfy l >= m >= 0");
  if (l + m > kBudget) throw std::invalid_argument("highest weight exceeds the Freudenthal budget");

  const std::pair<int, int> lambda{l, m};
  const std::pair<int, int> rho{2, 1};
  const std::pair<int, int> lr{l + 2, m + 1};
  const int norm_lr = dot(lr, lr);

  // mu = lambda - a (1,-1) - b (0,2); depth a + b.
  struct Entry {
    int depth;
    std::pair<int, int> mu;
  };
  std::vector<Entry> order;
  for (int x = -l; x <= l; ++x)
    for (int y = -l; y <= l; ++y) {
      const int a = l - x;
      const int twice_b = (l - x) + (m - y);
      if (a < 0 || twice_b < 0 || twice_b % 2 != 0) continue;
      order.push_back({a + twice_b / 2, {x, y}});
    }
  std::sort(order.begin(), order.end(), [](const Entry& u, const Entry& v) { return u.depth < v.depth; });

  std::map<std::pair<int, int>, std::int64_t> mult;
  auto lookup = [&](std::pair<int, int> w) {
    const auto it = mult.find(w);
    return it == mult.end() ? std::int64_t{0} : it->second;
  };
  for (const auto& [depth, mu] : order) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    std::int64_t numerator = 0;
    for (const auto& alpha : kPositiveRoots) {
      for (int k = 1;; ++k) {
        const std::pair<int, int> w{mu.first + k * alpha.first, mu.second + k * alpha.second};
        if (std::abs(w.first) > l || std::abs(w.second) > l) break;
        numerator += lookup(w) * dot(w, alpha);
      }
    }
    numerator *= 2;
    const std::pair<int, int> mr{mu.first + rho.first, mu.second + rho.second};
    const int denominator = norm_lr - dot(mr, mr);
    if (denominator == 0) {
      if (numerator != 0) throw std::logic_error("Freudenthal recursion hit a zero denominator");
      continue;
    }
    if (numerator % denominator != 0) throw std::logic_error("Freudenthal recursion is not integral");
    const std::int64_t value = numerator / denominator;
    if (value < 0) throw std::logic_error("negative weight multiplicity");
    if (value != 0) mult[mu] = value;
  }
  return mult;
}

Sp4CharacterPolynomial sp4_character_polynomial(int l, int m) {
  const auto mult = sp4_weight_multiplicities(l, m);
  const int r = l + m;

  Laurent rest(r);
  for (const auto& [w, k] : mult) rest.at(w.first, w.second) = k;

  const std::vector<std::pair<std::pair<int, int>, int>> e1{{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}};
  const std::vector<std::pair<std::pair<int, int>, int>> e2{
      {{1, 1}, 1}, {{1, -1}, 1}, {{-1, 1}, 1}, {{-1, -1}, 1}, {{0, 0}, 2}};

  // e2^j, then e1^i e2^j on demand.
  std::map<std::pair<int, int>, Laurent> products;
  auto product = [&](int i, int j) -> const Laurent& {
    const auto key = std::pair{i, j};
    if (auto it = products.find(key); it != products.end()) return it->second;
    Laurent value(r);
    if (i == 0 && j == 0) {
      value.at(0, 0) = 1;
    } else if (i > 0) {
      value = products.at({i - 1, j}).times(e1);
    } else {
      value = products.at({0, j - 1}).times(e2);
    }
    return products.emplace(key, std::move(value)).first->second;
  };
  auto build = [&](int i, int j) -> const Laurent& {
    for (int jj = 0; jj <= j; ++jj) product(0, jj);
    for (int ii = 1; ii <= i; ++ii) product(ii, j);
    return products.at({i, j});
  };

  Sp4CharacterPolynomial out;
  out.l = l;
  out.m = m;
  for (;;) {
    // Largest dominant weight still present: maximal a + b, then maximal a.
    int best_a = -1, best_b = -1;
    for (int a = 0; a <= r; ++a)
      for (int b = 0; b <= a; ++b) {
        if (rest.at(a, b) == 0) continue;
        if (best_a < 0 || a + b > best_a + best_b || (a + b == best_a + best_b && a > best_a)) {
          best_a = a;
          best_b = b;
        }
      }
    if (best_a < 0) break;
    const mpz_class c = rest.at(best_a, best_b);
    const Laurent& basis = build(best_a - best_b, best_b);
    for (std::size_t idx = 0; idx < rest.c.size(); ++idx) rest.c[idx] -= c * basis.c[idx];
    out.coefficients[{best_a - best_b, best_b}] = c;
  }
  for (const auto& v : rest.c) {
    if (v != 0) throw std::logic_error("character is not Weyl invariant");
  }
  return out;
}

mpz_class Sp4CharacterPolynomial::evaluate(const mpz_class& a1, const mpz_class& a2, const mpz_class& p) const {
  mpz_class total = 0;
  for (const auto& [ij, c] : coefficients) {
    const auto [i, j] = ij;
    mpz_class term = c, power;
    mpz_pow_ui(power.get_mpz_t(), a1.get_mpz_t(), static_cast<unsigned long>(i));
    term *= power;
    mpz_pow_ui(power.get_mpz_t(), a2.get_mpz_t(), static_cast<unsigned long>(j));
    term *= power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>((l + m - i - 2 * j) / 2));
    term *= power;
    total += term;
  }
  return total;
}

std::int64_t Sp4CharacterPolynomial::dimension() const { return evaluate(4, 6, 1).get_si(); }

}  // namespace siegel::oracle
