#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace siegel {

bool is_prime(std::int64_t n);

/// The prime field F_p for an odd prime p. Elements are residues in [0, p).
class PrimeField {
 public:
  /// Throws UsageError unless p is an odd prime.
  explicit PrimeField(std::int64_t p);

  std::int64_t p() const { return p_; }

  int add(int a, int b) const { int s = a + b; return s >= p_ ? s - static_cast<int>(p_) : s; }
  int sub(int a, int b) const { int s = a - b; return s < 0 ? s + static_cast<int>(p_) : s; }
  int neg(int a) const { return a == 0 ? 0 : static_cast<int>(p_) - a; }
  int mul(int a, int b) const { return static_cast<int>((static_cast<std::int64_t>(a) * b) % p_); }
  /// Multiplicative inverse of a nonzero element.
  int inv(int a) const { return inverse_[a]; }
  int reduce(std::int64_t a) const { a %= p_; return static_cast<int>(a < 0 ? a + p_ : a); }

  /// Quadratic character with chi(0) = 0.
  int chi(int a) const { return chi_[a]; }
  std::span<const std::int8_t> chi_table() const { return chi_; }

 private:
  std::int64_t p_;
  std::vector<std::int8_t> chi_;
  std::vector<int> inverse_;
};

/// F_{p^2} = F_p[t]/(t^2 - d) with d the smallest positive quadratic non-residue.
/// An element u + v t is stored as the index u + p v, so F_p embeds as the indices [0, p).
class QuadExtField {
 public:
  explicit QuadExtField(const PrimeField& base);

  struct Element {
    int u = 0;
    int v = 0;
    friend bool operator==(const Element&, const Element&) = default;
  };

  const PrimeField& base() const { return base_; }
  std::int64_t p() const { return base_.p(); }
  std::int64_t order() const { return base_.p() * base_.p(); }
  int nonresidue() const { return d_; }

  int index(Element e) const { return e.u + static_cast<int>(base_.p()) * e.v; }
  Element element(int index) const {
    const int p = static_cast<int>(base_.p());
    return {index % p, index / p};
  }

  Element add(Element a, Element b) const { return {base_.add(a.u, b.u), base_.add(a.v, b.v)}; }
  Element mul(Element a, Element b) const;
  /// Norm to F_p: u^2 - d v^2.
  int norm(Element a) const;

  int chi(Element a) const { return chi_[index(a)]; }
  std::span<const std::int8_t> chi_table() const { return chi_; }

 private:
  PrimeField base_;
  int d_;
  std::vector<std::int8_t> chi_;
};

/// Flattened arithmetic tables for F_q (q = p or p^2), used by the enumeration kernels.
/// Elements are indices in [0, q); for q = p^2 the indexing matches QuadExtField.
struct FieldTables {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::vector<int> add;  // q*q
  std::vector<int> mul;  // q*q
  std::vector<int> neg;  // q
  std::vector<std::int8_t> chi;  // q

  int plus(int a, int b) const { return add[static_cast<std::size_t>(a) * q + b]; }
  int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * q + b]; }

  static FieldTables of(const PrimeField& f);
  static FieldTables of(const QuadExtField& f);
};

}  // namespace siegel
