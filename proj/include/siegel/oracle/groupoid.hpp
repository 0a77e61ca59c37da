#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include <gmpxx.h>

namespace siegel::oracle {

/// Isomorphism classes of genus-2 curves y^2 = F(x, z) over F_p found by explicit orbit
/// enumeration of GL_2(F_p) x F_p^* on all p^7 coefficient vectors, with each class
/// weighted by 1/|Aut C| = (p - 1)/|stabiliser|. Point counts and squarefreeness are
/// computed from scratch (Euler's criterion, repeated roots over F_{p^k}, k <= 3).
struct Genus2Groupoid {
  int p = 0;
  std::int64_t group_order = 0;   // |GL_2(F_p)| after dividing out the trivially acting scalars
  std::int64_t models = 0;        // squarefree forms
  std::int64_t iso_classes = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, mpq_class> mass;  // (a1, a2) -> sum 1/|Aut|
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> classes;  // (a1, a2) -> #iso classes
};

Genus2Groupoid genus2_groupoid(int p);

/// Isomorphism classes of elliptic curves y^2 = x^3 + c2 x^2 + c4 x + c6 over F_{p^k} under
/// x -> u^2 x + r, y -> u^3 y, weighted by 1/|Aut E| = 1/|stabiliser|.
struct EllipticGroupoid {
  int p = 0;
  int q = 0;
  std::int64_t models = 0;
  std::int64_t iso_classes = 0;
  std::map<std::int64_t, mpq_class> mass;  // a -> sum 1/|Aut|
};

EllipticGroupoid elliptic_groupoid(int p, int k);

}  // namespace siegel::oracle
