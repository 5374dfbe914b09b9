#include "permcode/selftest.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>

#include "permcode/certify.hpp"
#include "permcode/contraction.hpp"
#include "permcode/distance.hpp"
#include "permcode/finite_field.hpp"
#include "permcode/groups.hpp"

namespace permcode::selftest {

namespace {

// splitmix64; keeps the randomized suites reproducible across platforms.
uint64_t next_u64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

size_t bounded(uint64_t& state, size_t bound) {
  return static_cast<size_t>(next_u64(state) % bound);
}

struct Recorder {
  SuiteResult result;

  explicit Recorder(std::string name) { result.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result.checks;
    if (!ok) {
      ++result.failures;
      if (result.detail.empty()) result.detail = what;
    }
  }
};

std::string describe_pair(const Permutation& sigma, const Permutation& tau) {
  return "sigma=[" + format_image_table(sigma) + "] tau=[" +
         format_image_table(tau) + "]";
}

bool is_odd_long_cycle(const std::vector<int>& cycle) {
  return cycle.size() >= 3 && cycle.size() % 2 == 1;
}

std::vector<int> sorted_lengths(const std::vector<std::vector<int>>& cycles) {
  std::vector<int> lengths;
  lengths.reserve(cycles.size());
  for (const auto& c : cycles) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(unchecked_permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation random_permutation(int n, uint64_t& state) {
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  for (size_t s = images.size() - 1; s > 0; --s)
    std::swap(images[s], images[bounded(state, s + 1)]);
  return unchecked_permutation(std::move(images));
}

SuiteResult suite_bijection_roundtrip(int n) {
  Recorder rec("bijection-and-cycle-roundtrip");
  for (const auto& sigma : all_permutations(n)) {
    auto sorted = sigma.images();
    std::sort(sorted.begin(), sorted.end());
    bool bijection = true;
    for (int x = 0; x < n; ++x)
      bijection = bijection && sorted[static_cast<size_t>(x)] == x;
    rec.check(bijection, "images not a bijection: " + format_image_table(sigma));

    const auto dec = cycle_decomposition(sigma);
    bool canonical = true;
    std::set<int> seen;
    int previous_leader = -1;
    for (const auto& cycle : dec.cycles) {
      canonical = canonical && cycle.size() >= 2;
      canonical = canonical &&
                  *std::min_element(cycle.begin(), cycle.end()) == cycle.front();
      canonical = canonical && cycle.front() > previous_leader;
      previous_leader = cycle.front();
      for (int s : cycle) canonical = canonical && seen.insert(s).second;
    }
    rec.check(canonical, "non-canonical decomposition: " + format_cycles(dec));
    rec.check(Permutation::from_cycles(n, dec.cycles) == sigma,
              "cycle round trip failed: " + format_image_table(sigma));
  }
  return rec.result;
}

SuiteResult suite_metric(int exhaustive_n, int random_n, int random_triples,
                         uint64_t seed) {
  Recorder rec("hd-metric");
  auto check_triple = [&](const Permutation& a, const Permutation& b,
                          const Permutation& c) {
    const int ab = hamming_distance(a, b);
    rec.check(ab == hamming_distance(b, a), "hd not symmetric");
    rec.check((ab == 0) == (a == b), "hd zero iff equal fails");
    rec.check(hamming_distance(a, c) <= ab + hamming_distance(b, c),
              "triangle inequality fails");
  };

  const auto sn = all_permutations(exhaustive_n);
  for (const auto& a : sn)
    for (const auto& b : sn)
      for (const auto& c : sn) check_triple(a, b, c);

  uint64_t state = seed;
  for (int t = 0; t < random_triples; ++t)
    check_triple(random_permutation(random_n, state),
                 random_permutation(random_n, state),
                 random_permutation(random_n, state));
  return rec.result;
}

SuiteResult suite_distance_identities(int n) {
  Recorder rec("hd-quotient-identities");
  const auto sn = all_permutations(n);
  for (const auto& sigma : sn)
    for (const auto& tau : sn) {
      const int h = hamming_distance(sigma, tau);
      rec.check(h == n - fixed_point_count(quotient(sigma, tau)),
                "hd != n - fix(quotient): " + describe_pair(sigma, tau));
      rec.check(h != 1, "hd = 1 observed: " + describe_pair(sigma, tau));
    }
  return rec.result;
}

SuiteResult suite_inverse_contraction(int n) {
  Recorder rec("inverse-contraction-commute");
  for (const auto& sigma : all_permutations(n))
    rec.check(inverse(contract(sigma)) == contract(inverse(sigma)),
              "inverse/contract do not commute: " + format_image_table(sigma));
  return rec.result;
}

SuiteResult suite_single_contraction_drop(int n) {
  Recorder rec("single-contraction-drop");
  const auto sn = all_permutations(n);
  const int top = n - 1;
  for (const auto& sigma : sn)
    for (const auto& tau : sn) {
      const Permutation sct = contract(sigma);
      const Permutation tct = contract(tau);
      const int drop =
          hamming_distance(sigma, tau) - hamming_distance(sct, tct);
      rec.check(drop >= 0 && drop <= 3,
                "drop outside 0..3: " + describe_pair(sigma, tau));

      const int c = sigma(top);
      const int d = tau(top);
      const Permutation zeta = quotient(sigma, tau);
      const bool three_cycle_factor = c != top && d != top && c != d &&
                                      zeta(top) == c && zeta(c) == d &&
                                      zeta(d) == top;
      rec.check((drop == 3) == three_cycle_factor,
                "drop-3 three-cycle criterion fails: " +
                    describe_pair(sigma, tau));
      if (three_cycle_factor) {
        // The contracted quotient is zeta with that 3-cycle cancelled.
        const Permutation cancelled = compose(
            zeta, inverse(Permutation::from_cycles(n, {{top, c, d}})));
        bool same = cancelled(top) == top;
        const Permutation qct = quotient(sct, tct);
        for (int x = 0; x < top && same; ++x) same = cancelled(x) == qct(x);
        rec.check(same, "cancelled quotient mismatch: " +
                            describe_pair(sigma, tau));
      }
    }
  return rec.result;
}

SuiteResult suite_delta_accounting(int n) {
  Recorder rec("delta-accounting");
  const auto sn = all_permutations(n);
  for (const auto& sigma : sn)
    for (const auto& tau : sn) {
      const int drop = hamming_distance(sigma, tau) -
                       hamming_distance(contract(sigma), contract(tau));
      rec.check(drop == delta(sigma, tau) - delta_ct(sigma, tau),
                "drop != delta - delta_ct: " + describe_pair(sigma, tau));
    }
  return rec.result;
}

SuiteResult suite_drop_classifier(int n) {
  Recorder rec("drop-classifier");
  const auto sn = all_permutations(n);
  for (const auto& sigma : sn)
    for (const auto& tau : sn) {
      const auto lines = matching_lines(sigma, tau);
      rec.check(lines.size() == 1,
                "classifier lines not unique: " + describe_pair(sigma, tau));
      if (lines.size() != 1) continue;
      const DeltaClass dc = classify(sigma, tau);
      const int drop = hamming_distance(sigma, tau) -
                       hamming_distance(contract(sigma), contract(tau));
      rec.check(dc.delta_hd == drop,
                "classified drop wrong: " + describe_pair(sigma, tau));
    }
  return rec.result;
}

SuiteResult suite_quotient_stability(int n) {
  Recorder rec("quotient-stability");
  const auto sn = all_permutations(n);
  const int top = n - 1;
  for (const auto& sigma : sn)
    for (const auto& tau : sn) {
      const Permutation zeta = quotient(sigma, tau);
      const Permutation zeta_ct = quotient(contract(sigma), contract(tau));
      const int c = sigma(top);
      const int b = sigma(tau.preimage_of(top));
      bool stable = true;
      for (int x = 0; x < top; ++x) {
        if (x == c || x == b) continue;
        stable = stable && zeta_ct(x) == zeta(x);
      }
      rec.check(stable, "quotient changed off {b,c}: " +
                            describe_pair(sigma, tau));
    }
  return rec.result;
}

SuiteResult suite_chi_prediction(int n) {
  Recorder rec("chi-prediction");
  const auto sn = all_permutations(n);
  for (const auto& sigma : sn)
    for (const auto& tau : sn) {
      const Permutation sct = contract(sigma);
      const Permutation tct = contract(tau);
      if (sct == tct) continue;
      const ChiPrediction pred = predict_decomposition(sigma, tau);
      const int drop =
          hamming_distance(sigma, tau) - hamming_distance(sct, tct);

      auto expected = pred.rho.cycles;
      expected.insert(expected.end(), pred.chi.begin(), pred.chi.end());
      expected = canonical_cycle_set(std::move(expected));
      const auto actual =
          canonical_cycle_set(cycle_decomposition(quotient(sct, tct)).cycles);
      rec.check(expected == actual,
                "predicted decomposition mismatch: " + describe_pair(sigma, tau));

      const int omega_len = pred.omega.length();
      const int pi_len = pred.pi.length();
      int chi_total = 0;
      for (const auto& cycle : pred.chi)
        chi_total += static_cast<int>(cycle.size());

      rec.check(pred.chi.size() <= 2, "chi has more than two cycles");
      if (pred.chi.size() == 2)
        rec.check(pred.omega_equals_pi,
                  "two-cycle chi outside the merged case: " +
                      describe_pair(sigma, tau));

      bool law = true;
      switch (drop) {
        case 0:
          law = (pred.omega.trivial() || pred.pi.trivial()) &&
                pred.chi.size() <= 1 && chi_total == omega_len + pi_len;
          break;
        case 1:
          if (pred.omega_equals_pi)
            law = chi_total == omega_len - 1;
          else
            law = pred.chi.size() == 1 && chi_total == omega_len + pi_len - 1;
          break;
        case 2:
          law = pred.omega_equals_pi && pred.chi.size() <= 1 &&
                chi_total == omega_len - 2;
          break;
        case 3:
          law = pred.omega_equals_pi && omega_len == 3 && pred.chi.empty();
          break;
        default:
          law = false;
      }
      rec.check(law, "length law fails at drop " + std::to_string(drop) +
                         ": " + describe_pair(sigma, tau));
    }
  return rec.result;
}

SuiteResult suite_odd_cycle_witness(int n) {
  Recorder rec("odd-cycle-witness");
  const auto sn = all_permutations(n);
  for (const auto& sigma : sn)
    for (const auto& tau : sn) {
      const Permutation sct = contract(sigma);
      const Permutation tct = contract(tau);
      if (sct == tct) continue;

      std::vector<std::vector<int>> factors;
      for (auto& cycle : cycle_decomposition(quotient(sct, tct)).cycles)
        if (is_odd_long_cycle(cycle)) factors.push_back(std::move(cycle));

      const auto witness = construct_odd_cycle_witness(sigma, tau, factors);
      const int drop =
          hamming_distance(sigma, tau) - hamming_distance(sct, tct);

      const auto quotient_cycles =
          canonical_cycle_set(cycle_decomposition(quotient(sigma, tau)).cycles);
      bool members_ok = true;
      for (const auto& cycle : witness)
        members_ok = members_ok && is_odd_long_cycle(cycle) &&
                     std::binary_search(quotient_cycles.begin(),
                                        quotient_cycles.end(), cycle);
      rec.check(members_ok, "witness member is not an odd factor: " +
                                describe_pair(sigma, tau));

      const auto lc = sorted_lengths(factors);
      const auto lw = sorted_lengths(witness);
      bool relation = false;
      switch (drop) {
        case 0:
          relation = lw == lc;
          break;
        case 1:
          if (lc.size() <= 1) {
            relation = lw.empty();
          } else if (lw.size() == lc.size() - 1) {
            // either one input length dropped, or two merged into their
            // sum plus one
            for (size_t s = 0; s < lc.size() && !relation; ++s) {
              auto reduced = lc;
              reduced.erase(reduced.begin() + static_cast<long>(s));
              relation = reduced == lw;
            }
            for (size_t s = 0; s < lc.size() && !relation; ++s)
              for (size_t t = s + 1; t < lc.size() && !relation; ++t) {
                auto reduced = lc;
                const int merged = lc[s] + lc[t] + 1;
                reduced.erase(reduced.begin() + static_cast<long>(t));
                reduced.erase(reduced.begin() + static_cast<long>(s));
                reduced.push_back(merged);
                std::sort(reduced.begin(), reduced.end());
                relation = reduced == lw;
              }
          }
          break;
        case 2:
          if (lw == lc) {
            relation = true;
          } else if (lw.size() == lc.size()) {
            for (size_t s = 0; s < lc.size() && !relation; ++s) {
              auto grown = lc;
              grown[s] += 2;
              std::sort(grown.begin(), grown.end());
              relation = grown == lw;
            }
          }
          break;
        case 3: {
          auto extended = lc;
          extended.push_back(3);
          std::sort(extended.begin(), extended.end());
          relation = lw == extended;
          break;
        }
        default:
          relation = false;
      }
      rec.check(relation, "witness size/length relation fails at drop " +
                              std::to_string(drop) + ": " +
                              describe_pair(sigma, tau));
    }
  return rec.result;
}

namespace {

void check_multi_contraction_pair(Recorder& rec, const Permutation& sigma,
                                  const Permutation& tau, int max_m) {
  const int n = sigma.degree();
  std::vector<int> odd_lengths;
  for (const auto& cycle : cycle_decomposition(quotient(sigma, tau)).cycles)
    if (cycle.size() % 2 == 1) odd_lengths.push_back(static_cast<int>(cycle.size()));

  Permutation s = sigma;
  Permutation t = tau;
  const int initial = hamming_distance(s, t);
  for (int m = 1; m <= std::min(max_m, n - 1); ++m) {
    s = contract(s);
    t = contract(t);
    bool applicable = true;
    for (int len : odd_lengths)
      applicable = applicable && !(len >= 3 && len <= 2 * m + 1);
    if (!applicable) continue;
    const int drop = initial - hamming_distance(s, t);
    rec.check(drop <= 2 * m,
              "drop " + std::to_string(drop) + " exceeds 2m at m=" +
                  std::to_string(m) + ": " + describe_pair(sigma, tau));
  }
}

}  // namespace

SuiteResult suite_multi_contraction_exhaustive(int n, int max_m) {
  Recorder rec("multi-contraction-bound-exhaustive-s" + std::to_string(n));
  const auto sn = all_permutations(n);
  for (size_t s = 0; s < sn.size(); ++s)
    for (size_t t = s + 1; t < sn.size(); ++t)
      check_multi_contraction_pair(rec, sn[s], sn[t], max_m);
  return rec.result;
}

SuiteResult suite_multi_contraction_random(int n, long long pairs, int max_m,
                                           uint64_t seed) {
  Recorder rec("multi-contraction-bound-random-s" + std::to_string(n));
  uint64_t state = seed;
  for (long long t = 0; t < pairs; ++t)
    check_multi_contraction_pair(rec, random_permutation(n, state),
                                 random_permutation(n, state), max_m);
  return rec.result;
}

SuiteResult suite_hd_increase_random(int n, int arrays, uint64_t seed) {
  Recorder rec("hd-increase-biconditional");
  const auto sn = all_permutations(n);
  uint64_t state = seed;
  long long skipped = 0;
  for (int t = 0; t < arrays; ++t) {
    const size_t size = 2 + bounded(state, 5);  // 2..6
    std::set<size_t> picked;
    while (picked.size() < size) picked.insert(bounded(state, sn.size()));
    std::vector<Permutation> members;
    for (size_t index : picked) members.push_back(sn[index]);
    PermutationArray P = make_array(n, std::move(members));

    auto [contracted, report] = contract_array(P, 1);
    (void)report;
    if (contracted.size() < 2) {
      ++skipped;
      continue;
    }
    const auto out = check_hd_increase_conditions(P);
    rec.check(out.increased == (out.condition1 && out.condition2),
              "biconditional fails for a random array");
  }
  rec.result.detail = rec.result.failures == 0
                          ? std::to_string(skipped) + " arrays skipped (single-member contraction)"
                          : rec.result.detail;
  return rec.result;
}

SuiteResult suite_no_increase_at_distance4(int n, int arrays, uint64_t seed) {
  Recorder rec("no-hd-increase-at-distance-4");
  uint64_t state = seed;
  long long skipped = 0;
  for (int t = 0; t < arrays; ++t) {
    const size_t size = 2 + bounded(state, 3);  // 2..4
    std::vector<Permutation> members;
    for (size_t s = 0; s < size; ++s)
      members.push_back(random_permutation(n, state));
    PermutationArray P = make_array(n, std::move(members));
    if (P.size() < 2 || min_hamming_distance(P) < 4) {
      ++skipped;
      continue;
    }
    auto [contracted, report] = contract_array(P, 1);
    (void)report;
    if (contracted.size() < 2) {
      ++skipped;
      continue;
    }
    rec.check(min_hamming_distance(contracted) <= min_hamming_distance(P),
              "hd increased although hd(P) >= 4");
  }
  if (rec.result.failures == 0)
    rec.result.detail = std::to_string(skipped) + " arrays below distance 4";
  return rec.result;
}

SuiteResult suite_array_drop_small(int threads) {
  Recorder rec("array-contraction-drop");
  const auto s4 = all_permutations(4);
  for (size_t s = 0; s < s4.size(); ++s)
    for (size_t t = s + 1; t < s4.size(); ++t) {
      PermutationArray P = make_array(4, {s4[s], s4[t]});
      const int d = min_hamming_distance(P);
      auto [contracted, report] = contract_array(P, 1);
      (void)report;
      if (contracted.size() >= 2) {
        rec.check(min_hamming_distance(contracted) >= d - 3,
                  "array hd dropped more than 3");
        if (has_no_short_odd_cycle(quotient(s4[s], s4[t]), 1))
          rec.check(min_hamming_distance(contracted) >= d - 2,
                    "drop exceeded 2 without a 3-cycle");
      }
    }

  const auto agl17 = verify_array_contraction_bound(agl1(17), 2, threads);
  rec.check(agl17.hypothesis_holds, "agl1(17) m=2 hypothesis rejected");
  rec.check(agl17.conclusions_hold, "agl1(17) m=2 conclusions fail");
  const auto agl7 = verify_array_contraction_bound(agl1(7), 1, threads);
  rec.check(!agl7.hypothesis_holds, "agl1(7) m=1 hypothesis not rejected");
  return rec.result;
}

SuiteResult suite_group_sanity(int threads) {
  Recorder rec("group-sanity");

  for (int q : {4, 5, 7, 8, 9}) {
    const auto G = agl1(q);
    rec.check(static_cast<long long>(G.size()) ==
                  static_cast<long long>(q) * (q - 1),
              "agl1 size wrong at q=" + std::to_string(q));
    rec.check(G.contains(Permutation::identity(q)), "identity missing from agl1");
    const int brute = min_hamming_distance(G, threads);
    rec.check(brute == q - 1, "agl1 min hd wrong at q=" + std::to_string(q));
    rec.check(group_min_distance(G) == brute,
              "group shortcut disagrees with brute force (agl1)");
    bool fixed_ok = true;
    for (const auto& g : G.members)
      if (!g.is_identity()) fixed_ok = fixed_ok && fixed_point_count(g) <= 1;
    rec.check(fixed_ok, "agl1 member fixes more than one symbol");

    // sharply 2-transitive: (g(0), g(1)) hits every ordered pair once
    std::set<std::pair<int, int>> images;
    for (const auto& g : G.members) images.insert({g(0), g(1)});
    rec.check(images.size() == G.size(), "agl1 not regular on ordered pairs");
  }

  for (int q : {4, 5, 7, 8, 9}) {
    const auto G = pgl2(q);
    rec.check(static_cast<long long>(G.size()) ==
                  static_cast<long long>(q) * q * q - q,
              "pgl2 size wrong at q=" + std::to_string(q));
    const int brute = min_hamming_distance(G, threads);
    rec.check(brute == q - 1, "pgl2 min hd wrong at q=" + std::to_string(q));
    rec.check(group_min_distance(G) == brute,
              "group shortcut disagrees with brute force (pgl2)");
    bool fixed_ok = true;
    for (const auto& g : G.members)
      if (!g.is_identity()) fixed_ok = fixed_ok && fixed_point_count(g) <= 2;
    rec.check(fixed_ok, "pgl2 member fixes more than two symbols");

    std::set<std::tuple<int, int, int>> images;
    for (const auto& g : G.members) images.insert({g(0), g(1), g(2)});
    rec.check(images.size() == G.size(), "pgl2 not regular on ordered triples");
  }

  const auto ag9 = agammal1(9);
  rec.check(ag9.size() == 144, "agammal1(9) size wrong");
  rec.check(min_hamming_distance(ag9, threads) == 6, "agammal1(9) min hd wrong");
  rec.check(group_min_distance(ag9) == 6, "agammal1(9) shortcut wrong");

  const auto pg4 = pgammal2(4);
  rec.check(pg4.size() == 120, "pgammal2(4) size wrong");
  rec.check(min_hamming_distance(pg4, threads) == 2, "pgammal2(4) min hd wrong");
  rec.check(group_min_distance(pg4) == 2, "pgammal2(4) shortcut wrong");

  rec.check(agammal1(4).size() == 24, "agammal1(4) size wrong");
  rec.check(agammal1(7).members == agl1(7).members,
            "agammal1 differs from agl1 at prime q");
  rec.check(pgammal2(5).members == pgl2(5).members,
            "pgammal2 differs from pgl2 at prime q");

  // closure spot check beyond the shortcut's sampling
  const auto G = pgl2(5);
  uint64_t state = 17;
  for (int t = 0; t < 32; ++t) {
    const auto& u = G.members[bounded(state, G.size())];
    const auto& v = G.members[bounded(state, G.size())];
    rec.check(G.contains(quotient(u, v)), "pgl2(5) not quotient-closed");
  }
  return rec.result;
}

SuiteResult suite_field_axioms() {
  Recorder rec("field-axioms");
  for (int q : {4, 8, 9, 16, 25, 27}) {
    const auto pk = FieldSpec::prime_power(q);
    const FieldSpec F(pk->first, pk->second);
    const int k = F.k();

    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        rec.check(F.add(a, b) == F.add(b, a), "addition not commutative");
        rec.check(F.mul(a, b) == F.mul(b, a), "multiplication not commutative");
        for (int c = 0; c < q; ++c) {
          rec.check(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)),
                    "addition not associative");
          rec.check(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)),
                    "multiplication not associative");
          rec.check(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)),
                    "distributivity fails");
        }
      }

    for (int a = 0; a < q; ++a) {
      rec.check(F.add(a, F.neg(a)) == 0, "additive inverse fails");
      if (a != 0) {
        rec.check(F.mul(a, F.inv(a)) == 1, "multiplicative inverse fails");
        rec.check(F.pow(a, q - 1) == 1, "multiplicative order fails");
      }
      for (int i = 0; i < k; ++i) {
        for (int b = 0; b < q; ++b) {
          rec.check(F.frobenius(F.add(a, b), i) ==
                        F.add(F.frobenius(a, i), F.frobenius(b, i)),
                    "frobenius not additive");
          rec.check(F.frobenius(F.mul(a, b), i) ==
                        F.mul(F.frobenius(a, i), F.frobenius(b, i)),
                    "frobenius not multiplicative");
        }
      }
      rec.check(F.frobenius(a, 0) == a, "frobenius(.,0) not identity");
      int iterated = a;
      for (int i = 0; i < k; ++i) iterated = F.frobenius(iterated, 1);
      rec.check(iterated == a, "k-fold frobenius not identity");
    }
  }

  rec.check(FieldSpec(2, 2).modulus() == std::vector<int>({1, 1, 1}),
            "GF(4) modulus wrong");
  rec.check(FieldSpec(3, 2).modulus() == std::vector<int>({1, 0, 1}),
            "GF(9) modulus wrong");
  rec.check(FieldSpec(5, 1).modulus() == std::vector<int>({0, 1}),
            "GF(5) modulus wrong");
  return rec.result;
}

std::vector<SuiteResult> run_selftest(bool full, uint64_t seed, int threads) {
  std::vector<SuiteResult> results;
  results.push_back(suite_bijection_roundtrip(5));
  results.push_back(suite_metric(4, 8, 2000, seed));
  results.push_back(suite_distance_identities(4));
  results.push_back(suite_distance_identities(5));
  results.push_back(suite_inverse_contraction(5));
  results.push_back(suite_single_contraction_drop(5));
  results.push_back(suite_delta_accounting(5));
  results.push_back(suite_drop_classifier(4));
  results.push_back(suite_drop_classifier(5));
  results.push_back(suite_quotient_stability(5));
  results.push_back(suite_chi_prediction(5));
  results.push_back(suite_odd_cycle_witness(5));
  results.push_back(suite_multi_contraction_exhaustive(5, 3));
  results.push_back(suite_hd_increase_random(5, 10000, seed));
  results.push_back(suite_no_increase_at_distance4(7, 2000, seed));
  results.push_back(suite_array_drop_small(threads));
  results.push_back(suite_group_sanity(threads));
  results.push_back(suite_field_axioms());
  if (full) {
    results.push_back(suite_inverse_contraction(6));
    results.push_back(suite_delta_accounting(6));
    results.push_back(suite_chi_prediction(6));
    results.push_back(suite_odd_cycle_witness(6));
    results.push_back(suite_multi_contraction_exhaustive(6, 3));
    results.push_back(suite_multi_contraction_random(9, 100000, 3, seed));
  }
  return results;
}

}  // namespace permcode::selftest
