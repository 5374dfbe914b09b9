#pragma once

#include <vector>

#include "permcode/perm.hpp"

namespace permcode {

/// The six symbols that determine how one contraction changes the Hamming
/// distance of a pair (sigma, tau) of degree n:
///   i = sigma^{-1}(n-1), j = tau^{-1}(n-1),
///   a = tau(i), b = sigma(j), c = sigma(n-1), d = tau(n-1).
struct ContractionContext {
  int i, j, a, b, c, d;

  static ContractionContext of(const Permutation& sigma,
                               const Permutation& tau);

  bool operator==(const ContractionContext&) const = default;
};

/// Result of the 14-line drop classifier: `line` identifies the matched
/// case (1..14) and `delta_hd` the exact drop
/// hd(sigma,tau) - hd(sigma^CT,tau^CT) it implies (0 for lines 1-5, 1 for
/// 6-9, 2 for 10-13, 3 for line 14).
struct DeltaClass {
  int line;
  int delta_hd;
  ContractionContext context;
};

/// A cycle of a quotient permutation, possibly trivial. A symbol that is
/// fixed belongs to a cycle of zero length; we keep its anchor so trivial
/// cycles stay addressable. For a nontrivial cycle, `symbols` is the full
/// cycle starting at the anchor.
struct AnchoredCycle {
  int anchor = 0;
  std::vector<int> symbols;

  bool trivial() const { return symbols.empty(); }
  int length() const { return static_cast<int>(symbols.size()); }
};

/// Predicted decomposition of the contracted quotient. omega is the cycle
/// of n-1 in sigma^{-1}tau and pi the cycle of sigma(n-1); chi is the
/// replacement factor (0, 1, or 2 cycles; 2 only in the line-6 case with
/// omega == pi); rho collects the untouched residual cycles. The contracted
/// quotient decomposes exactly as rho together with chi.
struct ChiPrediction {
  AnchoredCycle omega;
  AnchoredCycle pi;
  bool omega_equals_pi = false;
  std::vector<std::vector<int>> chi;  // canonical cycles
  CycleDecomposition rho;             // degree n-1
};

struct MultiContractionReport {
  bool applicable;
  int drop;
  bool bound_holds;
};

/// Deletes the symbol n-1 from the disjoint cycle decomposition of sigma,
/// yielding a permutation of degree n-1. Requires degree >= 2.
Permutation contract(const Permutation& sigma);

/// m-fold iterate of contract; each step deletes the current top symbol.
/// Requires 1 <= m <= degree-1.
Permutation contract_m(const Permutation& sigma, int m);

/// Disagreement count over the index set {n-1, sigma^{-1}(n-1),
/// tau^{-1}(n-1)} (a set: coincidences shrink it). Range 0..3.
int delta(const Permutation& sigma, const Permutation& tau);

/// Contracted analogue of delta over {sigma^{-1}(n-1), tau^{-1}(n-1)}
/// intersected with the contracted domain {0,...,n-2}. Range 0..2.
int delta_ct(const Permutation& sigma, const Permutation& tau);

/// Returns the unique classifier line whose conditions hold. Exactly one
/// line matches any pair; if none does, that is an implementation bug and
/// a std::logic_error is thrown.
DeltaClass classify(const Permutation& sigma, const Permutation& tau);

/// All classifier lines whose conditions hold, in order. The invariant
/// suites use this to prove mutual exclusivity.
std::vector<int> matching_lines(const Permutation& sigma,
                                const Permutation& tau);

/// Requires contract(sigma) != contract(tau).
ChiPrediction predict_decomposition(const Permutation& sigma,
                                    const Permutation& tau);

/// True iff the disjoint cycle decomposition of pi has no cycle of odd
/// length ell with 3 <= ell <= 2m+1.
bool has_no_short_odd_cycle(const Permutation& pi, int m);

/// Given odd-length (>= 3) cycle factors C of
/// quotient(contract(sigma), contract(tau)), constructively produces a set
/// of odd-length cycle factors of quotient(sigma, tau). The construction is
/// keyed on the drop of the pair; with drop 1 and |C| <= 1 the witness set
/// is empty. Requires contract(sigma) != contract(tau) and that every
/// member of C is such a factor.
std::vector<std::vector<int>> construct_odd_cycle_witness(
    const Permutation& sigma, const Permutation& tau,
    const std::vector<std::vector<int>>& C);

/// applicable: quotient(sigma,tau) has no odd cycle of length 3..2m+1;
/// drop: hd before minus hd after m contractions;
/// bound_holds: !applicable or drop <= 2m.
MultiContractionReport check_multi_contraction_bound(const Permutation& sigma,
                                                     const Permutation& tau,
                                                     int m);

}  // namespace permcode
