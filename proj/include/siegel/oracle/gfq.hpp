#pragma once

#include <cstdint>
#include <vector>

namespace siegel::oracle {

/// Brute-force F_{p^k} (k <= 3) for cross-checking; built from a monic irreducible
/// modulus found by search. Deliberately shares no code with the production field module.
/// Elements are indices sum c_i p^i of their coefficient vectors.
class SmallField {
 public:
  SmallField(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  /// Index of the prime-field element c (0 <= c < p).
  int constant(std::int64_t c) const { return static_cast<int>(((c % p_) + p_) % p_); }

  int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * q_ + b]; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, std::int64_t e) const;
  /// Euler's criterion a^((q-1)/2) in {0, 1, -1}.
  int chi(int a) const;

 private:
  int p_, k_, q_;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace siegel::oracle
