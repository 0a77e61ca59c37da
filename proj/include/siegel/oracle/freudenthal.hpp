#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include <gmpxx.h>

namespace siegel::oracle {

/// Weight multiplicities of the Sp_4 representation with highest weight l e1 + m e2,
/// by Freudenthal's recursion over all weights. Throws std::invalid_argument when
/// l + m exceeds the budget (24) or the weight is not dominant.
std::map<std::pair<int, int>, std::int64_t> sp4_weight_multiplicities(int l, int m);

/// Character of V_(l,m) as a polynomial in (a1, a2, p):
///   sum c_(i,j) a1^i a2^j p^((l+m-i-2j)/2),
/// obtained by peeling orbit sums off the multiplicity table.
struct Sp4CharacterPolynomial {
  int l = 0;
  int m = 0;
  std::map<std::pair<int, int>, mpz_class> coefficients;

  mpz_class evaluate(const mpz_class& a1, const mpz_class& a2, const mpz_class& p) const;
  std::int64_t dimension() const;  // evaluated at the identity (a1, a2, p) = (4, 6, 1)
};

Sp4CharacterPolynomial sp4_character_polynomial(int l, int m);

}  // namespace siegel::oracle
