#include "siegel/trace.hpp"

#include <string>

#include "siegel/error.hpp"
#include "siegel/modform.hpp"

namespace siegel {

namespace {

mpz_class pow_int(std::int64_t base, int e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), mpz_class(base).get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

mpz_class require_integer(mpq_class value, const std::string& what) {
  value.canonicalize();
  if (value.get_den() != 1) throw ConsistencyError(what + " is not integral: " + value.get_str());
  return value.get_num();
}

}  // namespace

WeightPair WeightPair::of(int k1, int k2) {
  const std::string shown = "(" + std::to_string(k1) + ", " + std::to_string(k2) + ")";
  if (!(k1 > k2 && k2 > 3)) throw UsageError("weight " + shown + " is not regular: need k1 > k2 > 3");
  if ((k1 + k2) % 2 != 0) throw UsageError("weight " + shown + " has odd k1 + k2; its local system has no cohomology");
  return {k1, k2};
}

std::vector<WeightPair> regular_weights(int max_sum) {
  std::vector<WeightPair> out;
  for (int sum = 10; sum <= max_sum; sum += 2) {
    for (int k2 = 4; 2 * k2 < sum; ++k2) out.push_back(WeightPair::of(sum - k2, k2));
  }
  return out;
}

void CensusSet::check() const {
  const std::int64_t p = genus2.p;
  if (elliptic_p.p != p || elliptic_p.q != p) throw UsageError("elliptic census over F_p does not match p");
  if (elliptic_p2.p != p || elliptic_p2.q != p * p) throw UsageError("elliptic census over F_{p^2} does not match p");
}

mpq_class jacobian_locus_trace(const LocalSystem& sys, const CensusTable& census) {
  mpz_class sum = 0;
  for (const auto& [key, count] : census.counts) {
    sum += count * sp4_trace(sys, FrobeniusClass{census.p, key.first, key.second});
  }
  mpq_class out(sum, mpz_class(census.normalizer));
  out.canonicalize();
  return out;
}

mpq_class product_locus_trace(const LocalSystem& sys, const EllipticCensus& over_p, const EllipticCensus& over_p2) {
  const std::int64_t p = over_p.q;
  if (over_p2.q != p * p) throw UsageError("product locus needs elliptic censuses over F_p and F_{p^2}");

  mpz_class pairs = 0;
  for (const auto& [a, ca] : over_p.counts) {
    for (const auto& [b, cb] : over_p.counts) {
      pairs += mpz_class(ca) * cb * sp4_trace(sys, FrobeniusClass{p, a + b, a * b + 2 * p});
    }
  }
  // Frobenius swaps E and its conjugate; its square is Frob_{p^2} on H^1(E), so the
  // characteristic polynomial is x^4 - a' x^2 + p^2, i.e. a1 = 0, a2 = -a'.
  mpz_class induced = 0;
  for (const auto& [a, c] : over_p2.counts) induced += c * sp4_trace(sys, FrobeniusClass{p, 0, -a});

  const mpz_class np = over_p.normalizer;
  mpq_class out = mpq_class(pairs, np * np) + mpq_class(induced, mpz_class(over_p2.normalizer));
  out /= 2;
  out.canonicalize();
  return out;
}

mpz_class trace_ec_a2(const LocalSystem& sys, const CensusSet& censuses) {
  censuses.check();
  const mpq_class total = jacobian_locus_trace(sys, censuses.genus2) +
                          product_locus_trace(sys, censuses.elliptic_p, censuses.elliptic_p2);
  return require_integer(total, "trace on e_c(A_2, V_(" + std::to_string(sys.l) + "," + std::to_string(sys.m) + "))");
}

mpz_class second_row(const WeightPair& w, const EllipticCensus& over_p) {
  const auto checked = WeightPair::of(w.k1, w.k2);
  if (over_p.q != over_p.p) throw UsageError("second row needs the elliptic census over F_p");
  const std::int64_t p = over_p.p;
  const bool k1_even = checked.k1 % 2 == 0;
  const int k = k1_even ? checked.k1 : checked.k2 - 1;

  mpz_class out = dim_cusp_sl2(checked.r1()) * pow_int(p, checked.k2 - 2) * trace_ec_a1(checked.r2() - 2, over_p);
  out += dim_cusp_sl2(checked.r2());
  const mpz_class boundary = trace_ec_a1(k - 2, over_p);
  out += k1_even ? boundary : mpz_class(-boundary);
  if (k1_even) out += 1;
  return out;
}

mpz_class endoscopic_term(const WeightPair& w, std::int64_t p) {
  const auto checked = WeightPair::of(w.k1, w.k2);
  const int d = dim_cusp_sl2(checked.r1());
  if (d == 0) return 0;
  return d * pow_int(p, checked.k2 - 2) * trace_hecke_sl2(checked.r2(), p);
}

TraceReport hecke_trace_genus2(const WeightPair& w, const CensusSet& censuses, int normalization) {
  if (normalization < 1) throw UsageError("normalization factor must be positive");
  const auto checked = WeightPair::of(w.k1, w.k2);
  censuses.check();

  TraceReport r;
  r.weight = checked;
  r.p = censuses.p();
  r.normalization = normalization;
  const auto sys = checked.local_system();
  r.jacobian_term = jacobian_locus_trace(sys, censuses.genus2);
  r.product_term = product_locus_trace(sys, censuses.elliptic_p, censuses.elliptic_p2);
  r.trace_a2 = require_integer(r.jacobian_term + r.product_term, "trace on e_c(A_2, V_lambda)");
  r.second_row = second_row(checked, censuses.elliptic_p);
  r.endoscopic_term = endoscopic_term(checked, r.p);
  r.eisenstein_term = r.second_row + r.endoscopic_term;
  r.four_times_trace = -r.trace_a2 + r.second_row;
  r.divisible = mpz_divisible_ui_p(r.four_times_trace.get_mpz_t(), static_cast<unsigned long>(normalization)) != 0;
  if (r.divisible) r.hecke_trace = mpz_class(r.four_times_trace / normalization);
  return r;
}

const TraceReport& require_consistent(const TraceReport& report) {
  if (!report.divisible) {
    throw ConsistencyError("weight (" + std::to_string(report.weight.k1) + ", " + std::to_string(report.weight.k2) +
                           ") at p=" + std::to_string(report.p) + ": " + report.four_times_trace.get_str() +
                           " is not divisible by the normalization factor " + std::to_string(report.normalization));
  }
  return report;
}

}  // namespace siegel
