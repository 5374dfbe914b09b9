#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permcode/perm.hpp"

namespace permcode::selftest {

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::string detail;  // first failure, for diagnostics

  bool passed() const { return failures == 0; }
};

/// All of S_n in lexicographic image-table order.
std::vector<Permutation> all_permutations(int n);

Permutation random_permutation(int n, uint64_t& state);

// Exhaustive and randomized invariant suites. Each returns the number of
// checks run and how many failed; `n` is the symmetric-group degree swept.
SuiteResult suite_bijection_roundtrip(int n);
SuiteResult suite_metric(int exhaustive_n, int random_n, int random_triples,
                         uint64_t seed);
SuiteResult suite_distance_identities(int n);
SuiteResult suite_inverse_contraction(int n);
SuiteResult suite_single_contraction_drop(int n);
SuiteResult suite_delta_accounting(int n);
SuiteResult suite_drop_classifier(int n);
SuiteResult suite_quotient_stability(int n);
SuiteResult suite_chi_prediction(int n);
SuiteResult suite_odd_cycle_witness(int n);
SuiteResult suite_multi_contraction_exhaustive(int n, int max_m);
SuiteResult suite_multi_contraction_random(int n, long long pairs, int max_m,
                                           uint64_t seed);
SuiteResult suite_hd_increase_random(int n, int arrays, uint64_t seed);
SuiteResult suite_no_increase_at_distance4(int n, int arrays, uint64_t seed);
SuiteResult suite_array_drop_small(int threads = 0);
SuiteResult suite_group_sanity(int threads = 0);
SuiteResult suite_field_axioms();

/// quick: exhaustive S_4/S_5 sweeps plus the randomized array suite.
/// full: adds the S_6 sweeps and the randomized degree-9 multi-contraction
/// sweep. The seed feeds every randomized suite.
std::vector<SuiteResult> run_selftest(bool full, uint64_t seed,
                                      int threads = 0);

}  // namespace permcode::selftest
