#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permcode/perm.hpp"

namespace permcode {

struct ArrayProvenance {
  std::string family;
  int q = 0;
  int contractions = 0;
};

/// A finite set of distinct same-degree permutations. Members are kept
/// sorted by image table, so generation order is deterministic and
/// membership is a binary search.
struct PermutationArray {
  int degree = 0;
  std::vector<Permutation> members;
  std::optional<ArrayProvenance> provenance;

  size_t size() const { return members.size(); }
  bool contains(const Permutation& sigma) const;
};

/// Sorts, deduplicates, and validates (non-empty, uniform degree).
PermutationArray make_array(int degree, std::vector<Permutation> members,
                            std::optional<ArrayProvenance> provenance = {});

/// AGL(1,q): all maps x -> a*x + b over GF(q) with a != 0, acting on the
/// symbols 0..q-1 under the canonical element indexing. Size q(q-1).
PermutationArray agl1(int q);

/// PGL(2,q): the Moebius maps x -> (a*x + b)/(c*x + d) with ad - bc != 0,
/// acting on q+1 symbols; field element e is symbol index(e) and the point
/// at infinity is the top symbol q. Matrices are enumerated modulo scalars
/// by normalizing the first nonzero entry to 1. Size q(q-1)(q+1).
PermutationArray pgl2(int q);

/// AGammaL(1,q), q = p^k: all maps x -> a * x^(p^i) + b with a != 0 and
/// 0 <= i < k, deduplicated by image table. Size k*q*(q-1).
PermutationArray agammal1(int q);

/// PGammaL(2,q): Moebius maps composed with Frobenius (infinity fixed by
/// Frobenius), deduplicated by image table. Size k*q*(q-1)*(q+1).
PermutationArray pgammal2(int q);

}  // namespace permcode
