#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

#include "siegel/ff.hpp"

namespace siegel {

/// Frobenius on H^1 of a genus-2 curve (or an abelian surface) over F_p, recorded by
/// its characteristic polynomial x^4 - a1 x^3 + a2 x^2 - p a1 x + p^2.
struct FrobeniusClass {
  std::int64_t p = 0;
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;

  friend auto operator<=>(const FrobeniusClass&, const FrobeniusClass&) = default;
};

/// Loose Weil envelope |a1| <= 4 sqrt(p), |a2| <= 6p.
bool within_weil_envelope(const FrobeniusClass& cls);

/// Largest deviation | |root| - sqrt(p) | over the four complex roots of the characteristic
/// polynomial. Floating point; diagnostics only.
double weil_root_deviation(const FrobeniusClass& cls);

/// Frobenius class from the point counts N1 = #C(F_p), N2 = #C(F_{p^2}).
/// Throws ConsistencyError when a2 is not integral or the class leaves the Weil envelope.
FrobeniusClass frobenius_class(std::int64_t n1, std::int64_t n2, std::int64_t p);

/// Coefficients (f0, ..., f6) of the binary sextic F(x, z) = sum f_i x^i z^(6-i), as F_p residues.
using Sextic = std::array<int, 7>;

/// True when F is squarefree as a binary form: deg F(x, 1) >= 5 and gcd(f, f') = 1.
bool is_squarefree(const Sextic& f, const PrimeField& field);

/// #C(F_q) for y^2 = F(x, z), one term 1 + chi(F(x, z)) per point of P^1(F_q).
/// The coefficients must lie in F_p, which `field` (F_p or F_{p^2}) contains.
std::int64_t genus2_point_count(const Sextic& f, const FieldTables& field);

/// Histogram of Frobenius classes over all squarefree binary sextics y^2 = F(x, z) over F_p.
/// The model set is a GL_2(F_p)-torsor over the groupoid of genus-2 curves, so
/// count / normalizer is the mass sum_C 1/|Aut C| in each class.
struct CensusTable {
  static constexpr const char* kLocus = "genus2-jacobian";

  std::int64_t p = 0;
  std::int64_t normalizer = 0;   // |GL_2(F_p)| = (p^2 - 1)(p^2 - p)
  std::int64_t total = 0;        // sum of counts
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> counts;  // (a1, a2) -> models

  mpq_class mass() const {
    mpq_class m{mpz_class(total), mpz_class(normalizer)};
    m.canonicalize();
    return m;
  }
  std::int64_t count(std::int64_t a1, std::int64_t a2) const;

  friend bool operator==(const CensusTable&, const CensusTable&) = default;
};

/// Histogram of Frobenius traces over all models y^2 = x^3 + c2 x^2 + c4 x + c6 over F_q
/// with nonzero discriminant. The substitutions x -> u^2 x + r, y -> u^3 y form a group of
/// order q(q - 1) acting with stabilizers Aut(E).
struct EllipticCensus {
  static constexpr const char* kLocus = "elliptic";

  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t normalizer = 0;   // q(q - 1)
  std::int64_t total = 0;
  std::map<std::int64_t, std::int64_t> counts;  // a = q + 1 - #E(F_q) -> models

  mpq_class mass() const {
    mpq_class m{mpz_class(total), mpz_class(normalizer)};
    m.canonicalize();
    return m;
  }
  std::int64_t count(std::int64_t a) const;

  friend bool operator==(const EllipticCensus&, const EllipticCensus&) = default;
};

/// Closed-form number of squarefree binary sextic forms over F_p: (p - 1)(p^6 - p^4).
std::int64_t squarefree_sextic_count(std::int64_t p);
std::int64_t gl2_order(std::int64_t p);

struct CensusOptions {
  unsigned workers = 1;
};

EllipticCensus elliptic_census(const PrimeField& field, const CensusOptions& opts = {});
EllipticCensus elliptic_census(const QuadExtField& field, const CensusOptions& opts = {});
CensusTable genus2_census(const PrimeField& field, const CensusOptions& opts = {});

/// Structural checks shared by the builders and the cache loader. Each returns an empty
/// string when the table is sound, otherwise a description of the first violation.
std::string verify_census(const CensusTable& table);
std::string verify_census(const EllipticCensus& table);

}  // namespace siegel
