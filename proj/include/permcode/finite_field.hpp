#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace permcode {

/// Arithmetic context for GF(p^k). Elements are plain ints in 0..q-1,
/// read as polynomials sum c_i x^i with index = sum c_i p^i; index 0 is the
/// additive and index 1 the multiplicative identity. This indexing is the
/// canonical symbol labeling used by the group generators, and the modulus
/// is recorded in certificates so labelings are reproducible bit-exactly.
class FieldSpec {
 public:
  /// Selects the lexicographically smallest monic irreducible modulus of
  /// degree k (coefficients read low-to-high as a base-p number). For k = 1
  /// the modulus is x and arithmetic is mod p. Throws if p is not prime,
  /// k < 1, or p^k exceeds the desk-scale maximum.
  FieldSpec(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }

  /// Coefficients low-to-high, length k+1, top coefficient 1.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;  // throws on a == 0
  int pow(int a, long long t) const;
  /// a^(p^i) for 0 <= i < k; a field automorphism, identity at i = 0.
  int frobenius(int a, int i) const;

  static bool is_prime(int p);
  /// Decomposes q as p^k for prime p; nullopt if q is not a prime power.
  static std::optional<std::pair<int, int>> prime_power(int q);

  static constexpr int kMaxOrder = 16384;

 private:
  std::vector<int> unpack(int index) const;
  int pack(const std::vector<int>& digits) const;

  int p_, k_, q_;
  std::vector<int> modulus_;
};

}  // namespace permcode
