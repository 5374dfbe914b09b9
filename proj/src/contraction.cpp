#include "permcode/contraction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace permcode {

namespace {

void require_pair(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree())
    throw std::invalid_argument("degree mismatch");
  if (sigma.degree() < 2)
    throw std::invalid_argument("pair operations require degree >= 2");
}

bool distinct3(int x, int y, int z) { return x != y && x != z && y != z; }

bool distinct4(int w, int x, int y, int z) {
  return w != x && w != y && w != z && x != y && x != z && y != z;
}

// Cycle of `start` in zeta, listed from `start`; empty if `start` is fixed.
std::vector<int> cycle_from(const Permutation& zeta, int start) {
  if (zeta(start) == start) return {};
  std::vector<int> cycle;
  int y = start;
  do {
    cycle.push_back(y);
    y = zeta(y);
  } while (y != start);
  return cycle;
}

std::vector<int> slice(const std::vector<int>& v, size_t lo, size_t hi) {
  if (lo >= hi) return {};
  return std::vector<int>(v.begin() + static_cast<long>(lo),
                          v.begin() + static_cast<long>(hi));
}

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace

Permutation contract(const Permutation& sigma) {
  const int n = sigma.degree();
  if (n < 2) throw std::invalid_argument("contraction requires degree >= 2");
  const int top = n - 1;
  const int c = sigma(top);
  std::vector<int> images(sigma.images().begin(), sigma.images().end() - 1);
  if (c != top) {
    // sigma moves the top symbol: reroute its preimage straight to c.
    images[static_cast<size_t>(sigma.preimage_of(top))] = c;
  }
  return unchecked_permutation(std::move(images));
}

Permutation contract_m(const Permutation& sigma, int m) {
  if (m < 1 || m > sigma.degree() - 1)
    throw std::invalid_argument("contraction count out of range");
  Permutation result = sigma;
  for (int step = 0; step < m; ++step) result = contract(result);
  return result;
}

ContractionContext ContractionContext::of(const Permutation& sigma,
                                          const Permutation& tau) {
  require_pair(sigma, tau);
  const int top = sigma.degree() - 1;
  ContractionContext ctx{};
  ctx.i = sigma.preimage_of(top);
  ctx.j = tau.preimage_of(top);
  ctx.a = tau(ctx.i);
  ctx.b = sigma(ctx.j);
  ctx.c = sigma(top);
  ctx.d = tau(top);
  return ctx;
}

int delta(const Permutation& sigma, const Permutation& tau) {
  require_pair(sigma, tau);
  const int top = sigma.degree() - 1;
  std::set<int> indices{top, sigma.preimage_of(top), tau.preimage_of(top)};
  int count = 0;
  for (int x : indices)
    if (sigma(x) != tau(x)) ++count;
  return count;
}

int delta_ct(const Permutation& sigma, const Permutation& tau) {
  require_pair(sigma, tau);
  const int top = sigma.degree() - 1;
  const Permutation sct = contract(sigma);
  const Permutation tct = contract(tau);
  std::set<int> indices{sigma.preimage_of(top), tau.preimage_of(top)};
  int count = 0;
  for (int x : indices)
    if (x < top && sct(x) != tct(x)) ++count;
  return count;
}

std::vector<int> matching_lines(const Permutation& sigma,
                                const Permutation& tau) {
  const ContractionContext ctx = ContractionContext::of(sigma, tau);
  const int t = sigma.degree() - 1;
  const auto [i, j, a, b, c, d] = ctx;
  const bool apart = distinct3(i, j, t);  // i, j, n-1 pairwise distinct

  // One predicate per classifier line, spelled out exactly as stated so the
  // mutual-exclusivity suite exercises the conditions themselves.
  const bool line[15] = {
      false,
      /*1*/ apart && a != b && c == d,
      /*2*/ apart && a == b && c == d,
      /*3*/ i == j && i != t && a == t && b == t && c != d,
      /*4*/ i == j && i != t && a == t && b == t && c == d,
      /*5*/ i == t && j == t && a == t && b == t && c == t && d == t,
      /*6*/ apart && distinct4(a, b, c, d),
      /*7*/ apart && a == b && c != d,
      /*8*/ i == t && j != t && a == d && c == t && distinct3(a, b, t),
      /*9*/ j == t && i != t && b == c && d == t && distinct3(a, b, t),
      /*10*/ apart && a == c && b != d,
      /*11*/ apart && a != c && b == d,
      /*12*/ i == t && j != t && a == b && a == d && c == t && a != t,
      /*13*/ j == t && i != t && a == b && a == c && d == t && a != t,
      /*14*/ apart && a == c && b == d,
  };
  std::vector<int> matched;
  for (int k = 1; k <= 14; ++k)
    if (line[k]) matched.push_back(k);
  return matched;
}

DeltaClass classify(const Permutation& sigma, const Permutation& tau) {
  const auto matched = matching_lines(sigma, tau);
  if (matched.empty())
    throw std::logic_error("drop classifier matched no line; this is a bug");
  const int line = matched.front();
  const int drop_of_line = line <= 5 ? 0 : line <= 9 ? 1 : line <= 13 ? 2 : 3;
  return DeltaClass{line, drop_of_line, ContractionContext::of(sigma, tau)};
}

ChiPrediction predict_decomposition(const Permutation& sigma,
                                    const Permutation& tau) {
  require_pair(sigma, tau);
  if (contract(sigma) == contract(tau))
    throw std::invalid_argument(
        "prediction requires distinct contractions");

  const int n = sigma.degree();
  const int top = n - 1;
  const Permutation zeta = quotient(sigma, tau);
  const DeltaClass dc = classify(sigma, tau);
  const int b = dc.context.b;
  const int c = dc.context.c;

  ChiPrediction pred;
  // w = [n-1, a, ..., b] when nontrivial; the symbol before n-1 is b.
  const std::vector<int> w = cycle_from(zeta, top);
  pred.omega = AnchoredCycle{top, w};
  const bool c_in_omega =
      !w.empty() && std::find(w.begin(), w.end(), c) != w.end();
  if (c_in_omega) {
    std::vector<int> ps = w;
    std::rotate(ps.begin(), std::find(ps.begin(), ps.end(), c), ps.end());
    pred.pi = AnchoredCycle{c, std::move(ps)};
  } else {
    pred.pi = AnchoredCycle{c, cycle_from(zeta, c)};
  }
  pred.omega_equals_pi =
      (pred.omega.trivial() && pred.pi.trivial()) || c_in_omega;

  const size_t sz = w.size();
  const std::vector<int>& ps = pred.pi.symbols;  // [c, d, y...] when nontrivial
  std::vector<std::vector<int>> chi;
  switch (dc.line) {
    case 1:
      // w = [n-1, a, x..., b]; c = d is fixed.
      chi.push_back(concat({{w.back(), c, w[1]}, slice(w, 2, sz - 1)}));
      break;
    case 2:
      chi.push_back({b, c});
      break;
    case 3:
      chi.push_back(ps);
      break;
    case 4:
    case 5:
      break;
    case 6:
      if (!pred.omega_equals_pi) {
        chi.push_back(concat({{w.back(), ps[1]},
                              slice(ps, 2, ps.size()),
                              {c, w[1]},
                              slice(w, 2, sz - 1)}));
      } else {
        // Single cycle [n-1, a, x..., c, d, y..., b]: splits in two.
        const size_t pos = static_cast<size_t>(
            std::find(w.begin(), w.end(), c) - w.begin());
        chi.push_back(concat({{w.back(), w[pos + 1]}, slice(w, pos + 2, sz - 1)}));
        chi.push_back(concat({{c, w[1]}, slice(w, 2, pos)}));
      }
      break;
    case 7:
      chi.push_back(
          concat({{w.back(), ps[1]}, slice(ps, 2, ps.size()), {c}}));
      break;
    case 8:
    case 9:
      chi.push_back(concat({{w.back(), w[1]}, slice(w, 2, sz - 1)}));
      break;
    case 10:
      // w = [n-1, a, d, x..., b]
      chi.push_back(concat({{w.back(), w[2]}, slice(w, 3, sz - 1)}));
      break;
    case 11:
      // w = [n-1, a, x..., c, b]
      chi.push_back(concat({{w[1]}, slice(w, 2, sz - 2), {w[sz - 2]}}));
      break;
    case 12:
    case 13:
    case 14:
      break;
    default:
      throw std::logic_error("unreachable classifier line");
  }
  pred.chi = canonical_cycle_set(std::move(chi));

  pred.rho.degree = n - 1;
  for (auto& cycle : cycle_decomposition(zeta).cycles) {
    const bool touches =
        std::find(cycle.begin(), cycle.end(), top) != cycle.end() ||
        std::find(cycle.begin(), cycle.end(), c) != cycle.end();
    if (!touches) pred.rho.cycles.push_back(std::move(cycle));
  }
  return pred;
}

bool has_no_short_odd_cycle(const Permutation& pi, int m) {
  for (const auto& cycle : cycle_decomposition(pi).cycles) {
    const int len = static_cast<int>(cycle.size());
    if (len % 2 == 1 && len >= 3 && len <= 2 * m + 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> construct_odd_cycle_witness(
    const Permutation& sigma, const Permutation& tau,
    const std::vector<std::vector<int>>& C) {
  require_pair(sigma, tau);
  const Permutation sct = contract(sigma);
  const Permutation tct = contract(tau);
  if (sct == tct)
    throw std::invalid_argument("witness requires distinct contractions");

  const auto actual =
      canonical_cycle_set(cycle_decomposition(quotient(sct, tct)).cycles);
  std::vector<std::vector<int>> gammas;
  for (const auto& raw : C) {
    auto gamma = canonical_cycle(raw);
    if (gamma.size() < 3 || gamma.size() % 2 == 0)
      throw std::invalid_argument("witness input cycle must have odd length >= 3");
    if (!std::binary_search(actual.begin(), actual.end(), gamma))
      throw std::invalid_argument(
          "witness input cycle is not a factor of the contracted quotient");
    gammas.push_back(std::move(gamma));
  }
  gammas = canonical_cycle_set(std::move(gammas));
  if (std::adjacent_find(gammas.begin(), gammas.end()) != gammas.end())
    throw std::invalid_argument("witness input cycles must be distinct");

  const int drop = hamming_distance(sigma, tau) - hamming_distance(sct, tct);
  const ChiPrediction pred = predict_decomposition(sigma, tau);
  const auto& chi = pred.chi;
  const auto omega_cycle = canonical_cycle(pred.omega.symbols);
  const auto pi_cycle = canonical_cycle(pred.pi.symbols);

  std::vector<std::vector<int>> witness;
  switch (drop) {
    case 0:
      // At most one of omega/pi is nontrivial here; their product replaces
      // a gamma that coincides with chi.
      for (const auto& gamma : gammas) {
        if (chi.size() == 1 && gamma == chi.front())
          witness.push_back(pred.omega.trivial() ? pi_cycle : omega_cycle);
        else
          witness.push_back(gamma);
      }
      break;
    case 1: {
      if (gammas.size() <= 1) return {};
      size_t dropped = gammas.size() - 1;  // default: drop the canonical last
      if (chi.size() == 2) {
        std::vector<size_t> matched;
        for (size_t k = 0; k < gammas.size(); ++k)
          if (gammas[k] == chi[0] || gammas[k] == chi[1]) matched.push_back(k);
        if (matched.size() == 2) {
          for (size_t k = 0; k < gammas.size(); ++k)
            if (k != matched[0] && k != matched[1])
              witness.push_back(gammas[k]);
          witness.push_back(omega_cycle);
          break;
        }
        if (matched.size() == 1) dropped = matched.front();
      } else {
        for (size_t k = 0; k < gammas.size(); ++k)
          if (gammas[k] == chi.front()) dropped = k;
      }
      for (size_t k = 0; k < gammas.size(); ++k)
        if (k != dropped) witness.push_back(gammas[k]);
      break;
    }
    case 2:
      for (const auto& gamma : gammas) {
        if (chi.size() == 1 && gamma == chi.front())
          witness.push_back(omega_cycle);
        else
          witness.push_back(gamma);
      }
      break;
    case 3:
      witness = gammas;
      witness.push_back(omega_cycle);
      break;
    default:
      throw std::logic_error("contraction drop outside 0..3");
  }
  return canonical_cycle_set(std::move(witness));
}

MultiContractionReport check_multi_contraction_bound(const Permutation& sigma,
                                                     const Permutation& tau,
                                                     int m) {
  require_pair(sigma, tau);
  if (m < 1 || m > sigma.degree() - 1)
    throw std::invalid_argument("contraction count out of range");
  MultiContractionReport report{};
  report.applicable = has_no_short_odd_cycle(quotient(sigma, tau), m);
  report.drop = hamming_distance(sigma, tau) -
                hamming_distance(contract_m(sigma, m), contract_m(tau, m));
  report.bound_holds = !report.applicable || report.drop <= 2 * m;
  return report;
}

}  // namespace permcode
