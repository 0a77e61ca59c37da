#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "siegel/census.hpp"

namespace siegel {

/// Irreducible local system V_(l,m) on A_2: the representation of GSp_4 with highest
/// weight (l, m), l >= m >= 0, of motivic weight l + m.
struct LocalSystem {
  int l = 0;
  int m = 0;

  /// Throws UsageError unless l >= m >= 0.
  static LocalSystem of(int l, int m);

  /// -1 acts on V_(l,m) by (-1)^(l+m); odd systems have no cohomology on A_2.
  bool even() const { return (l + m) % 2 == 0; }

  friend bool operator==(const LocalSystem&, const LocalSystem&) = default;
};

/// Weyl dimension (l - m + 1)(m + 1)(l + 2)(l + m + 3) / 6.
std::int64_t weyl_dimension(const LocalSystem& sys);

/// H_0..H_n: complete homogeneous symmetric functions of the four Frobenius eigenvalues,
/// H_j = a1 H_{j-1} - a2 H_{j-2} + p a1 H_{j-3} - p^2 H_{j-4}.
std::vector<mpz_class> h_sequence(const mpz_class& a1, const mpz_class& a2, const mpz_class& p, int n);
std::vector<mpz_class> h_sequence(const FrobeniusClass& cls, int n);

/// Trace of Frobenius on V_(l,m) from the 2x2 symplectic Jacobi-Trudi determinant,
/// homogenised by the similitude p:
///   H_l H_m + p H_l H_{m-2} - H_{l+1} H_{m-1} - p H_{l-1} H_{m-1}.
mpz_class sp4_trace(const LocalSystem& sys, const mpz_class& a1, const mpz_class& a2, const mpz_class& p);
mpz_class sp4_trace(const LocalSystem& sys, const FrobeniusClass& cls);

}  // namespace siegel
