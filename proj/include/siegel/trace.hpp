#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "siegel/census.hpp"
#include "siegel/sp4char.hpp"

namespace siegel {

/// Regular weight (k1, k2) of the representation Sym^(k1-k2) (x) det^k2, k1 > k2 > 3, k1 + k2 even.
struct WeightPair {
  int k1 = 0;
  int k2 = 0;

  /// Throws UsageError outside the regular, even-sum domain.
  static WeightPair of(int k1, int k2);

  int r1() const { return k1 + k2 - 2; }
  int r2() const { return k1 - k2 + 2; }
  LocalSystem local_system() const { return {k1 - 3, k2 - 3}; }

  friend auto operator<=>(const WeightPair&, const WeightPair&) = default;
};

/// All regular weights with even sum and k1 + k2 <= max_sum, ordered by (sum, -k1).
std::vector<WeightPair> regular_weights(int max_sum);

/// The three censuses a prime needs: genus-2 curves over F_p and elliptic curves over F_p, F_{p^2}.
struct CensusSet {
  CensusTable genus2;
  EllipticCensus elliptic_p;
  EllipticCensus elliptic_p2;

  std::int64_t p() const { return genus2.p; }
  /// Throws UsageError if the three tables disagree on p or the elliptic fields are wrong.
  void check() const;
};

/// sum over genus-2 census classes of count * chi_(l,m) / |GL_2(F_p)|.
mpq_class jacobian_locus_trace(const LocalSystem& sys, const CensusTable& census);

/// Lefschetz sum over the locus of products E1 x E2, as the symmetric square
/// (1/2)(sum over pairs over F_p + sum over E/F_{p^2} with induced Frobenius x^4 - a' x^2 + p^2).
mpq_class product_locus_trace(const LocalSystem& sys, const EllipticCensus& over_p, const EllipticCensus& over_p2);

/// Trace of F_p on e_c(A_2, V_(l,m)); throws ConsistencyError if not integral.
mpz_class trace_ec_a2(const LocalSystem& sys, const CensusSet& censuses);

/// Second row of the trace formula in elliptic terms:
///   dim S_r1 p^(k2-2) e_c(A_1, Sym^(r2-2)) + dim S_r2 + (-1)^k1 e_c(A_1, Sym^(k-2)) + (1 + (-1)^k1)/2
/// with k = k1 for even k1 and k = k2 - 1 for odd k1.
mpz_class second_row(const WeightPair& w, const EllipticCensus& over_p);

/// Endoscopic contribution dim S_r1 * p^(k2-2) * Tr T(p)|S_r2.
mpz_class endoscopic_term(const WeightPair& w, std::int64_t p);

struct TraceReport {
  WeightPair weight;
  std::int64_t p = 0;
  int normalization = 4;

  mpq_class jacobian_term;
  mpq_class product_term;
  mpz_class trace_a2;
  mpz_class second_row;
  mpz_class endoscopic_term;
  mpz_class eisenstein_term;  // second_row + endoscopic_term
  mpz_class four_times_trace; // -trace_a2 + second_row
  bool divisible = false;     // four_times_trace = 0 mod normalization
  std::optional<mpz_class> hecke_trace;

  std::map<std::string, std::string> provenance;

  bool checks_passed() const { return divisible; }
};

/// Assembles every term for one weight and prime. A divisibility failure leaves
/// hecke_trace empty and divisible false; it is never rounded.
TraceReport hecke_trace_genus2(const WeightPair& w, const CensusSet& censuses, int normalization = 4);

/// Throws ConsistencyError when the report's divisibility check failed.
const TraceReport& require_consistent(const TraceReport& report);

}  // namespace siegel
