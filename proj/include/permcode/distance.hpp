#pragma once

#include <optional>
#include <utility>

#include "permcode/groups.hpp"

namespace permcode {

/// Exact minimum Hamming distance over all unordered pairs, by brute force.
/// Pairs are counted with early exit once the running count reaches the
/// current minimum, and the pair loop is chunked across `threads` workers
/// with a deterministic min-reduction (0 picks the hardware count).
/// Requires |P| >= 2.
int min_hamming_distance(const PermutationArray& P, int threads = 0);

/// Minimum distance of a quotient-closed array: degree minus the largest
/// fixed-point count over non-identity members. Closure is spot-checked by
/// deterministic pair sampling unless `trust_closure`; a sample whose
/// quotient is missing throws.
int group_min_distance(const PermutationArray& G, bool trust_closure = false);

struct ContractionReport {
  size_t size_before = 0;
  size_t size_after = 0;
  size_t duplicates_merged = 0;
  std::optional<int> min_hd_before;
  std::optional<int> min_hd_after;
};

/// Member-wise m-fold contraction with set semantics; the report keeps the
/// merge count, and minimum distances when `compute_hd` (and at least two
/// members are available on the respective side).
std::pair<PermutationArray, ContractionReport> contract_array(
    const PermutationArray& P, int m, bool compute_hd = false,
    int threads = 0);

/// When m < hd(P)/3, contracting m times must preserve the array size;
/// returns that assertion's outcome (false indicates an engine bug).
/// Vacuously true for m >= hd(P)/3.
bool verify_size_preservation(const PermutationArray& P, int m);

struct HdIncreaseReport {
  bool condition1 = false;  // every minimum-distance pair contracts equal
  bool condition2 = false;  // every farther pair stays > d or contracts equal
  bool increased = false;
};

/// Evaluates both conditions by pair enumeration, plus whether the minimum
/// distance actually increased. Requires |P^CT| >= 2. The tested guarantee:
/// increased holds exactly when both conditions do.
HdIncreaseReport check_hd_increase_conditions(const PermutationArray& P);

struct ArrayContractionBoundReport {
  bool hypothesis_holds = false;   // no pair quotient has an odd cycle in 3..2m+1
  bool conclusions_hold = false;   // hd drop <= 2m, and size kept when hd > 2m
  bool ok() const { return !hypothesis_holds || conclusions_hold; }
};

/// Checks the no-short-odd-cycle hypothesis over all pairs; when it holds,
/// verifies hd(P^CTm) >= hd(P) - 2m and, if hd(P) > 2m, that the size is
/// preserved. Requires |P| >= 2.
ArrayContractionBoundReport verify_array_contraction_bound(
    const PermutationArray& P, int m, int threads = 0);

}  // namespace permcode
