#include "permcode/distance.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "permcode/contraction.hpp"

namespace permcode {

namespace {

int resolve_threads(int threads, size_t work_items) {
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw == 0 ? 1 : static_cast<int>(hw);
  }
  threads = std::min<size_t>(static_cast<size_t>(threads), work_items);
  return std::max(threads, 1);
}

void atomic_min(std::atomic<int>& target, int value) {
  int current = target.load(std::memory_order_relaxed);
  while (value < current &&
         !target.compare_exchange_weak(current, value,
                                       std::memory_order_relaxed)) {
  }
}

}  // namespace

int min_hamming_distance(const PermutationArray& P, int threads) {
  const size_t count = P.members.size();
  if (count < 2)
    throw std::invalid_argument("minimum distance needs at least two members");
  const int n = P.degree;

  // Flat row-major copy keeps the pair loop on contiguous memory.
  std::vector<int32_t> flat(count * static_cast<size_t>(n));
  for (size_t s = 0; s < count; ++s)
    for (int x = 0; x < n; ++x)
      flat[s * static_cast<size_t>(n) + static_cast<size_t>(x)] =
          P.members[s](x);

  std::atomic<int> best{n};  // n is the largest possible distance
  const int workers = resolve_threads(threads, count - 1);

  auto run = [&](size_t first_row) {
    for (size_t s = first_row; s + 1 < count;
         s += static_cast<size_t>(workers)) {
      const int32_t* row_s = flat.data() + s * static_cast<size_t>(n);
      for (size_t t = s + 1; t < count; ++t) {
        const int32_t* row_t = flat.data() + t * static_cast<size_t>(n);
        const int bound = best.load(std::memory_order_relaxed);
        int disagreements = 0;
        for (int x = 0; x < n; ++x) {
          disagreements += row_s[x] != row_t[x];
          if (disagreements >= bound) break;  // cannot lower the minimum
        }
        atomic_min(best, disagreements);
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(run, static_cast<size_t>(w));
    for (auto& t : pool) t.join();
  }
  return best.load();
}

int group_min_distance(const PermutationArray& G, bool trust_closure) {
  const size_t count = G.members.size();
  if (count < 2)
    throw std::invalid_argument("minimum distance needs at least two members");

  if (!trust_closure) {
    std::mt19937_64 rng(0x5eed5eedULL);
    const int samples = 64;
    for (int s = 0; s < samples; ++s) {
      const size_t u = static_cast<size_t>(rng() % count);
      const size_t v = static_cast<size_t>(rng() % count);
      if (u == v) continue;
      if (!G.contains(quotient(G.members[u], G.members[v])))
        throw std::domain_error("closure sampling failure: array is not quotient-closed");
    }
  }

  int max_fixed = -1;
  for (const auto& g : G.members) {
    if (g.is_identity()) continue;
    max_fixed = std::max(max_fixed, fixed_point_count(g));
  }
  if (max_fixed < 0)
    throw std::domain_error("array has no non-identity member");
  return G.degree - max_fixed;
}

std::pair<PermutationArray, ContractionReport> contract_array(
    const PermutationArray& P, int m, bool compute_hd, int threads) {
  if (P.members.empty())
    throw std::invalid_argument("permutation array must be non-empty");
  if (m < 1 || m > P.degree - 1)
    throw std::invalid_argument("contraction count out of range");

  ContractionReport report;
  report.size_before = P.size();
  if (compute_hd && P.size() >= 2)
    report.min_hd_before = min_hamming_distance(P, threads);

  std::vector<Permutation> contracted;
  contracted.reserve(P.size());
  for (const auto& sigma : P.members) contracted.push_back(contract_m(sigma, m));

  std::optional<ArrayProvenance> provenance = P.provenance;
  if (provenance) provenance->contractions += m;
  PermutationArray result =
      make_array(P.degree - m, std::move(contracted), std::move(provenance));

  report.size_after = result.size();
  report.duplicates_merged = report.size_before - report.size_after;
  if (compute_hd && result.size() >= 2)
    report.min_hd_after = min_hamming_distance(result, threads);
  return {std::move(result), report};
}

bool verify_size_preservation(const PermutationArray& P, int m) {
  if (P.size() < 2)
    throw std::invalid_argument("size preservation needs at least two members");
  const int d = min_hamming_distance(P);
  if (3 * m >= d) return true;  // no assertion below d/3
  auto [contracted, report] = contract_array(P, m);
  (void)report;
  return contracted.size() == P.size();
}

HdIncreaseReport check_hd_increase_conditions(const PermutationArray& P) {
  const size_t count = P.size();
  if (count < 2)
    throw std::invalid_argument("need at least two members");
  auto [contracted_array, report] = contract_array(P, 1);
  (void)report;
  if (contracted_array.size() < 2)
    throw std::invalid_argument("contracted array must keep two members");

  const int d = min_hamming_distance(P);
  std::vector<Permutation> ct;
  ct.reserve(count);
  for (const auto& sigma : P.members) ct.push_back(contract(sigma));

  HdIncreaseReport out;
  out.condition1 = true;
  out.condition2 = true;
  for (size_t s = 0; s < count; ++s)
    for (size_t t = s + 1; t < count; ++t) {
      const int h = hamming_distance(P.members[s], P.members[t]);
      if (h == d) {
        if (ct[s] != ct[t]) out.condition1 = false;
      } else {
        if (ct[s] != ct[t] && hamming_distance(ct[s], ct[t]) <= d)
          out.condition2 = false;
      }
    }
  out.increased = min_hamming_distance(contracted_array) > d;
  return out;
}

ArrayContractionBoundReport verify_array_contraction_bound(
    const PermutationArray& P, int m, int threads) {
  if (P.size() < 2)
    throw std::invalid_argument("need at least two members");
  if (m < 1 || m > P.degree - 1)
    throw std::invalid_argument("contraction count out of range");

  ArrayContractionBoundReport out;
  out.hypothesis_holds = true;
  const size_t count = P.size();
  for (size_t s = 0; s < count && out.hypothesis_holds; ++s)
    for (size_t t = s + 1; t < count; ++t)
      if (!has_no_short_odd_cycle(quotient(P.members[s], P.members[t]), m)) {
        out.hypothesis_holds = false;
        break;
      }
  if (!out.hypothesis_holds) {
    out.conclusions_hold = true;  // vacuous
    return out;
  }

  const int d = min_hamming_distance(P, threads);
  auto [contracted, report] = contract_array(P, m, false, threads);
  (void)report;
  out.conclusions_hold = true;
  if (contracted.size() >= 2 &&
      min_hamming_distance(contracted, threads) < d - 2 * m)
    out.conclusions_hold = false;
  if (d > 2 * m && contracted.size() != P.size()) out.conclusions_hold = false;
  return out;
}

}  // namespace permcode
