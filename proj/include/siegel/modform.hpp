#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "siegel/census.hpp"

namespace siegel {

/// Dimension of the space S_k of level-1 elliptic cusp forms.
int dim_cusp_sl2(int k);

/// Truncated integer q-expansion: coefficient i is the coefficient of q^i.
using QExpansion = std::vector<mpz_class>;

QExpansion multiply(const QExpansion& f, const QExpansion& g, int precision);
QExpansion eisenstein_e4(int precision);
QExpansion eisenstein_e6(int precision);
/// Delta = (E4^3 - E6^2) / 1728; the division is checked to be exact.
QExpansion delta(int precision);

/// Basis f_1..f_d of S_k, echelonised so that f_i = q^i + O(q^(d+1)), with coefficients
/// through q^precision. Built from Delta * E4^a * E6^b, 4a + 6b = k - 12.
std::vector<std::vector<mpq_class>> cusp_basis(int k, int precision);

/// Trace of T(p) on S_k from q-expansions: (T_p f)_n = a_{np} + p^(k-1) a_{n/p}.
/// Throws UsageError for odd k or k < 4 and ConsistencyError if the trace is not integral.
mpz_class trace_hecke_sl2(int k, std::int64_t p);

/// Trace of Frobenius on e_c(A_1, Sym^n) as the mass-weighted Lefschetz sum
/// sum_E tr(Sym^n Frob_E) / |Aut E| over the elliptic census of F_q.
/// Throws ConsistencyError if the normalised sum is not an integer.
mpz_class trace_ec_a1(int n, const EllipticCensus& census);

/// tr Sym^n of a 2x2 Frobenius with trace a and determinant q.
mpz_class sym_power_trace(int n, std::int64_t a, std::int64_t q);

}  // namespace siegel
