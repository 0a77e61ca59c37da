#include "doctest.h"
#include "siegel/error.hpp"
#include "siegel/ff.hpp"
#include "siegel/oracle/gfq.hpp"

using namespace siegel;

TEST_CASE("prime field character table") {
  const PrimeField f(5);
  CHECK(f.chi(0) == 0);
  CHECK(f.chi(1) == 1);
  CHECK(f.chi(4) == 1);
  CHECK(f.chi(2) == -1);
  CHECK(f.chi(3) == -1);
  CHECK(PrimeField(7).chi(2) == 1);
}

TEST_CASE("excluded characteristics") {
  CHECK_THROWS_AS(PrimeField(2), UsageError);
  CHECK_THROWS_AS(PrimeField(9), UsageError);
  CHECK_THROWS_AS(PrimeField(1), UsageError);
}

TEST_CASE("least non-residue for the quadratic extension") {
  CHECK(QuadExtField(PrimeField(5)).nonresidue() == 2);
  CHECK(QuadExtField(PrimeField(7)).nonresidue() == 3);
  CHECK(QuadExtField(PrimeField(3)).nonresidue() == 2);
}

TEST_CASE("characters agree with Euler's criterion") {
  for (int p : {3, 5, 7, 11, 13}) {
    const PrimeField f(p);
    const oracle::SmallField ref(p, 1);
    for (int a = 0; a < p; ++a) CHECK(f.chi(a) == ref.chi(a));

    // residue counts on F_p^2 match an independently built F_p^2
    const QuadExtField f2(f);
    const oracle::SmallField ref2(p, 2);
    int plus = 0, ref_plus = 0;
    for (int i = 0; i < p * p; ++i) {
      plus += f2.chi_table()[i] == 1;
      ref_plus += ref2.chi(i) == 1;
    }
    CHECK(plus == ref_plus);
    CHECK(plus == (p * p - 1) / 2);
  }
}

TEST_CASE("quadratic extension multiplication is a field") {
  const PrimeField f(7);
  const QuadExtField f2(f);
  for (int i = 1; i < 49; ++i) {
    int hits = 0;
    for (int j = 1; j < 49; ++j) hits += f2.mul(f2.element(i), f2.element(j)) == QuadExtField::Element{1, 0};
    CHECK(hits == 1);
  }
  for (int i = 0; i < 49; ++i)
    for (int j = 0; j < 49; ++j) {
      const auto a = f2.element(i), b = f2.element(j);
      CHECK(f2.norm(f2.mul(a, b)) == f.mul(f2.norm(a), f2.norm(b)));
    }
}

TEST_CASE("field tables") {
  const PrimeField f(5);
  const auto t = FieldTables::of(QuadExtField(f));
  CHECK(t.q == 25);
  for (int a = 0; a < 25; ++a) CHECK(t.plus(a, t.neg[a]) == 0);
}
