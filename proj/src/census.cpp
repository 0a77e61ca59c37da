#include "siegel/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "siegel/error.hpp"

namespace siegel {

namespace {

std::int64_t isqrt_floor(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

/// gcd(f, f') over F_p with flattened tables; the enumeration kernel calls this ~p^7 times.
class SquarefreeTester {
 public:
  explicit SquarefreeTester(const PrimeField& f) : p_(static_cast<int>(f.p())) {
    mul_.resize(static_cast<std::size_t>(p_) * p_);
    inv_.resize(static_cast<std::size_t>(p_));
    for (int a = 0; a < p_; ++a) {
      inv_[a] = a == 0 ? 0 : f.inv(a);
      for (int b = 0; b < p_; ++b) mul_[static_cast<std::size_t>(a) * p_ + b] = f.mul(a, b);
    }
  }

  bool operator()(const Sextic& f) const {
    int da = 6;
    while (da >= 0 && f[da] == 0) --da;
    if (da < 5) return false;

    std::array<int, 7> a{};
    std::array<int, 7> b{};
    std::copy(f.begin(), f.end(), a.begin());
    int db = -1;
    for (int i = 1; i <= da; ++i) {
      b[i - 1] = mul(i % p_, f[i]);
      if (b[i - 1] != 0) db = i - 1;
    }
    // f' = 0 means f is a p-th power, never squarefree in degree >= 5.
    if (db < 0) return false;

    while (db >= 0) {
      const int lead_inv = inv_[b[db]];
      while (da >= db) {
        const int c = mul(a[da], lead_inv);
        const int shift = da - db;
        for (int i = 0; i <= db; ++i) {
          const int t = a[shift + i] - mul(c, b[i]);
          a[shift + i] = t < 0 ? t + p_ : t;
        }
        while (da >= 0 && a[da] == 0) --da;
      }
      std::swap(a, b);
      std::swap(da, db);
    }
    return da == 0;
  }

 private:
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * p_ + b]; }

  int p_;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

/// Runs `body(block, worker)` for every block in [0, blocks) over a pool of threads and
/// rethrows the first worker exception.
template <typename Body>
void run_blocks(int blocks, unsigned workers, Body&& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max(blocks, 1))));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto loop = [&](unsigned worker) {
    try {
      for (int b = next++; b < blocks; b = next++) body(b, worker);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = blocks;
    }
  };
  if (workers == 1) {
    loop(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(loop, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

EllipticCensus elliptic_census_impl(const FieldTables& t, unsigned workers) {
  const int q = static_cast<int>(t.q);
  const int p = static_cast<int>(t.p);
  const std::int64_t bound = isqrt_floor(4 * t.q);  // |a| <= 2 sqrt(q)
  const std::int64_t width = 2 * bound + 1;

  auto residue = [p](std::int64_t k) { return static_cast<int>(((k % p) + p) % p); };
  const int four = residue(4), eighteen = residue(18), minus27 = residue(-27);

  std::vector<int> x2(q), x3(q);
  for (int x = 0; x < q; ++x) {
    x2[x] = t.times(x, x);
    x3[x] = t.times(x2[x], x);
  }

  std::vector<std::vector<std::int64_t>> hist(std::max(1u, workers), std::vector<std::int64_t>(width, 0));
  run_blocks(q, workers, [&](int c2, unsigned worker) {
    auto& h = hist[worker];
    std::vector<int> g(q);
    const int c2sq = t.times(c2, c2);
    const int c2cube = t.times(c2sq, c2);
    for (int c4 = 0; c4 < q; ++c4) {
      for (int x = 0; x < q; ++x) {
        g[x] = t.plus(x3[x], t.plus(t.times(c2, x2[x]), t.times(c4, x)));
      }
      // disc(x^3 + a x^2 + b x + c) = (a^2 b^2 - 4 b^3) + c (18 a b - 4 a^3) - 27 c^2
      const int c4sq = t.times(c4, c4);
      const int d0 = t.plus(t.times(c2sq, c4sq), t.neg[t.times(four, t.times(c4sq, c4))]);
      const int d1 = t.plus(t.times(eighteen, t.times(c2, c4)), t.neg[t.times(four, c2cube)]);
      for (int c6 = 0; c6 < q; ++c6) {
        const int disc = t.plus(d0, t.times(c6, t.plus(d1, t.times(minus27, c6))));
        if (disc == 0) continue;
        std::int64_t s = 0;
        for (int x = 0; x < q; ++x) s += t.chi[t.plus(g[x], c6)];
        const std::int64_t a = -s;  // q + 1 - (q + 1 + s)
        if (a < -bound || a > bound) {
          throw ConsistencyError("elliptic census: Hasse bound violated, a = " + std::to_string(a));
        }
        ++h[a + bound];
      }
    }
  });

  EllipticCensus out;
  out.p = t.p;
  out.q = t.q;
  out.normalizer = t.q * (t.q - 1);
  for (std::int64_t i = 0; i < width; ++i) {
    std::int64_t c = 0;
    for (const auto& h : hist) c += h[i];
    if (c != 0) {
      out.counts[i - bound] = c;
      out.total += c;
    }
  }
  return out;
}

}  // namespace

bool within_weil_envelope(const FrobeniusClass& cls) {
  // |a1| <= 4 sqrt(p)  <=>  a1^2 <= 16 p
  return cls.a1 * cls.a1 <= 16 * cls.p && std::abs(cls.a2) <= 6 * cls.p;
}

double weil_root_deviation(const FrobeniusClass& cls) {
  using C = std::complex<long double>;
  const long double p = static_cast<long double>(cls.p);
  const long double root_p = std::sqrt(p);
  // x^4 - a1 x^3 + a2 x^2 - p a1 x + p^2 = x^2 Q(x + p/x) with Q(y) = y^2 - a1 y + (a2 - 2p).
  const long double disc = static_cast<long double>(cls.a1 * cls.a1 - 4 * (cls.a2 - 2 * cls.p));
  const C sq = std::sqrt(C(disc, 0));
  double worst = 0;
  for (const C y : {(C(cls.a1) + sq) / 2.0L, (C(cls.a1) - sq) / 2.0L}) {
    const C inner = std::sqrt(y * y - 4.0L * p);
    for (const C x : {(y + inner) / 2.0L, (y - inner) / 2.0L}) {
      worst = std::max(worst, static_cast<double>(std::abs(std::abs(x) - root_p)));
    }
  }
  return worst;
}

FrobeniusClass frobenius_class(std::int64_t n1, std::int64_t n2, std::int64_t p) {
  const std::int64_t a1 = p + 1 - n1;
  const std::int64_t twice_a2 = a1 * a1 - (p * p + 1 - n2);
  if (twice_a2 % 2 != 0) {
    throw ConsistencyError("point counts N1=" + std::to_string(n1) + ", N2=" + std::to_string(n2) +
                           " give a non-integral a2 at p=" + std::to_string(p));
  }
  FrobeniusClass cls{p, a1, twice_a2 / 2};
  if (!within_weil_envelope(cls)) {
    throw ConsistencyError("Frobenius class (" + std::to_string(cls.a1) + ", " + std::to_string(cls.a2) +
                           ") violates the Weil bounds at p=" + std::to_string(p));
  }
  return cls;
}

bool is_squarefree(const Sextic& f, const PrimeField& field) { return SquarefreeTester(field)(f); }

std::int64_t genus2_point_count(const Sextic& f, const FieldTables& field) {
  const int q = static_cast<int>(field.q);
  std::int64_t n = 0;
  for (int x = 0; x < q; ++x) {
    int v = f[6];
    for (int i = 5; i >= 0; --i) v = field.plus(field.times(v, x), f[i]);
    n += 1 + field.chi[v];
  }
  n += 1 + field.chi[f[6]];  // [1 : 0]
  return n;
}

std::int64_t CensusTable::count(std::int64_t a1, std::int64_t a2) const {
  const auto it = counts.find({a1, a2});
  return it == counts.end() ? 0 : it->second;
}

std::int64_t EllipticCensus::count(std::int64_t a) const {
  const auto it = counts.find(a);
  return it == counts.end() ? 0 : it->second;
}

std::int64_t squarefree_sextic_count(std::int64_t p) {
  const std::int64_t p2 = p * p, p4 = p2 * p2;
  return (p - 1) * (p4 * p2 - p4);
}

std::int64_t gl2_order(std::int64_t p) { return (p * p - 1) * (p * p - p); }

EllipticCensus elliptic_census(const PrimeField& field, const CensusOptions& opts) {
  return elliptic_census_impl(FieldTables::of(field), opts.workers);
}

EllipticCensus elliptic_census(const QuadExtField& field, const CensusOptions& opts) {
  return elliptic_census_impl(FieldTables::of(field), opts.workers);
}

CensusTable genus2_census(const PrimeField& field, const CensusOptions& opts) {
  const int p = static_cast<int>(field.p());
  const QuadExtField ext(field);
  const FieldTables t2 = FieldTables::of(ext);
  const int q = static_cast<int>(t2.q);
  const SquarefreeTester squarefree(field);

  // F_p points first, then one representative u + v t (1 <= v <= (p-1)/2) of each
  // conjugate pair in F_{p^2} \ F_p; conjugates contribute equal characters.
  std::vector<int> reps;
  for (int u = 0; u < p; ++u) reps.push_back(u);
  for (int v = 1; v <= (p - 1) / 2; ++v) {
    for (int u = 0; u < p; ++u) reps.push_back(ext.index({u, v}));
  }
  const int nreps = static_cast<int>(reps.size());

  // term[i][c][j] = c * reps[j]^i
  std::vector<std::vector<int>> term(7 * static_cast<std::size_t>(p), std::vector<int>(nreps));
  for (int j = 0; j < nreps; ++j) {
    int power = 1;
    for (int i = 1; i <= 6; ++i) {
      power = t2.times(power, reps[j]);
      for (int c = 0; c < p; ++c) term[static_cast<std::size_t>(i) * p + c][j] = t2.times(c, power);
    }
  }
  // chi of (g + f0), indexed [f0 * q + g]
  std::vector<std::int8_t> chi1_shift(static_cast<std::size_t>(p) * p), chi2_shift(static_cast<std::size_t>(p) * q);
  for (int f0 = 0; f0 < p; ++f0) {
    for (int g = 0; g < p; ++g) chi1_shift[static_cast<std::size_t>(f0) * p + g] = static_cast<std::int8_t>(field.chi(field.add(g, f0)));
    for (int g = 0; g < q; ++g) chi2_shift[static_cast<std::size_t>(f0) * q + g] = t2.chi[t2.plus(g, f0)];
  }

  const std::int64_t bound1 = isqrt_floor(16 * p);
  const std::int64_t bound2 = 6 * static_cast<std::int64_t>(p);
  const std::int64_t width2 = 2 * bound2 + 1;
  const std::int64_t width = (2 * bound1 + 1) * width2;
  const std::int64_t pp = static_cast<std::int64_t>(p) * p;

  const unsigned workers = std::max(1u, opts.workers);
  std::vector<std::vector<std::int64_t>> hist(workers, std::vector<std::int64_t>(width, 0));

  run_blocks(p * p, workers, [&](int block, unsigned worker) {
    const int f6 = block / p;
    const int f5 = block % p;
    if (f6 == 0 && f5 == 0) return;  // degree <= 4: z^2 divides F
    auto& h = hist[worker];

    const std::int64_t inf1 = f6 != 0 ? 1 + field.chi(f6) : 1;
    const std::int64_t inf2 = f6 != 0 ? 2 : 1;
    std::vector<int> s5(nreps), s4(nreps), s3(nreps), s2(nreps), g(nreps);
    const auto& t6 = term[6 * static_cast<std::size_t>(p) + f6];
    const auto& t5 = term[5 * static_cast<std::size_t>(p) + f5];
    for (int j = 0; j < nreps; ++j) s5[j] = t2.plus(t6[j], t5[j]);

    Sextic f{};
    f[6] = f6;
    f[5] = f5;
    for (f[4] = 0; f[4] < p; ++f[4]) {
      const auto& t4 = term[4 * static_cast<std::size_t>(p) + f[4]];
      for (int j = 0; j < nreps; ++j) s4[j] = t2.plus(s5[j], t4[j]);
      for (f[3] = 0; f[3] < p; ++f[3]) {
        const auto& t3 = term[3 * static_cast<std::size_t>(p) + f[3]];
        for (int j = 0; j < nreps; ++j) s3[j] = t2.plus(s4[j], t3[j]);
        for (f[2] = 0; f[2] < p; ++f[2]) {
          const auto& tt2 = term[2 * static_cast<std::size_t>(p) + f[2]];
          for (int j = 0; j < nreps; ++j) s2[j] = t2.plus(s3[j], tt2[j]);
          for (f[1] = 0; f[1] < p; ++f[1]) {
            const auto& t1 = term[1 * static_cast<std::size_t>(p) + f[1]];
            for (int j = 0; j < nreps; ++j) g[j] = t2.plus(s2[j], t1[j]);
            for (f[0] = 0; f[0] < p; ++f[0]) {
              if (!squarefree(f)) continue;
              const std::int8_t* c1 = &chi1_shift[static_cast<std::size_t>(f[0]) * p];
              const std::int8_t* c2 = &chi2_shift[static_cast<std::size_t>(f[0]) * q];
              std::int64_t sum1 = 0, nonzero = 0, sum2 = 0;
              for (int j = 0; j < p; ++j) {
                const int c = c1[g[j]];
                sum1 += c;
                nonzero += c != 0;
              }
              for (int j = p; j < nreps; ++j) sum2 += c2[g[j]];
              const std::int64_t n1 = p + sum1 + inf1;
              const std::int64_t n2 = pp + nonzero + 2 * sum2 + inf2;
              const std::int64_t a1 = p + 1 - n1;
              const std::int64_t twice_a2 = a1 * a1 - (pp + 1 - n2);
              if ((twice_a2 & 1) != 0 || a1 < -bound1 || a1 > bound1 || twice_a2 / 2 < -bound2 ||
                  twice_a2 / 2 > bound2) {
                frobenius_class(n1, n2, p);  // throws with a description
              }
              ++h[(a1 + bound1) * width2 + twice_a2 / 2 + bound2];
            }
          }
        }
      }
    }
  });

  CensusTable out;
  out.p = p;
  out.normalizer = gl2_order(p);
  for (std::int64_t i = 0; i < width; ++i) {
    std::int64_t c = 0;
    for (const auto& h : hist) c += h[i];
    if (c != 0) {
      out.counts[{i / width2 - bound1, i % width2 - bound2}] = c;
      out.total += c;
    }
  }
  return out;
}

std::string verify_census(const CensusTable& table) {
  if (table.p < 3 || !is_prime(table.p)) return "census prime is not an odd prime";
  if (table.normalizer != gl2_order(table.p)) return "normalizer differs from |GL_2(F_p)|";
  std::int64_t sum = 0;
  for (const auto& [key, c] : table.counts) {
    if (c <= 0) return "non-positive count";
    if (!within_weil_envelope({table.p, key.first, key.second})) return "class outside the Weil envelope";
    if (table.count(-key.first, key.second) != c) return "twist symmetry count(a1,a2) = count(-a1,a2) fails";
    sum += c;
  }
  if (sum != table.total) return "row counts do not sum to the recorded total";
  if (table.mass() != mpq_class(mpz_class(table.p) * table.p * table.p)) return "mass identity total/normalizer = p^3 fails";
  return {};
}

std::string verify_census(const EllipticCensus& table) {
  if (table.p < 3 || !is_prime(table.p)) return "census characteristic is not an odd prime";
  if (table.q != table.p && table.q != table.p * table.p) return "field size is neither p nor p^2";
  if (table.normalizer != table.q * (table.q - 1)) return "normalizer differs from q(q-1)";
  std::int64_t sum = 0;
  for (const auto& [a, c] : table.counts) {
    if (c <= 0) return "non-positive count";
    if (a * a > 4 * table.q) return "trace outside the Hasse bound";
    if (table.count(-a) != c) return "twist symmetry count(a) = count(-a) fails";
    sum += c;
  }
  if (sum != table.total) return "row counts do not sum to the recorded total";
  if (table.mass() != mpq_class(table.q)) return "mass identity total/normalizer = q fails";
  return {};
}

}  // namespace siegel
