// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Run through ctest as "acceptance" or directly; pass --threads N to bound
// the worker count used by the distance engine.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "permcode/certify.hpp"
#include "permcode/contraction.hpp"
#include "permcode/distance.hpp"
#include "permcode/selftest.hpp"

using namespace permcode;
using selftest::SuiteResult;

namespace {

int g_threads = 0;
int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void report(int criterion, const std::string& name, bool pass,
            const std::string& detail, double elapsed) {
  std::ostringstream line;
  line << (pass ? "[PASS] " : "[FAIL] ") << criterion << ' ' << name;
  if (!detail.empty()) line << ": " << detail;
  line << " (" << elapsed << " s)";
  std::cout << line.str() << std::endl;
  if (!pass) ++g_failures;
}

void run(int criterion, const std::string& name,
         const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    auto [ok, text] = body();
    pass = ok;
    detail = text;
  } catch (const std::exception& err) {
    detail = std::string("exception: ") + err.what();
  }
  report(criterion, name, pass, detail, seconds_since(start));
}

std::pair<bool, std::string> from_suites(std::vector<SuiteResult> suites) {
  long long checks = 0;
  for (const auto& suite : suites) {
    checks += suite.checks;
    if (!suite.passed())
      return {false, suite.name + " failed: " + suite.detail};
  }
  return {true, std::to_string(checks) + " checks"};
}

PermutationArray fixture_p1() {
  return make_array(5, {Permutation::identity(5),
                        parse_permutation("(1 4)", 5),
                        parse_permutation("(0 1 2)", 5),
                        parse_permutation("(1 2 3)", 5)});
}

PermutationArray fixture_p2() {
  return make_array(4, {parse_permutation("(0 1 2)", 4),
                        parse_permutation("(1 2 3)", 4)});
}

}  // namespace

int main(int argc, char** argv) {
  for (int arg = 1; arg < argc; ++arg) {
    if (std::strcmp(argv[arg], "--threads") == 0 && arg + 1 < argc)
      g_threads = std::atoi(argv[++arg]);
  }
  const uint64_t seed = 20240117ULL;
  CertifyOptions opts;
  opts.threads = g_threads;

  run(1, "pgl2-two-contraction-bounds", [&]() -> std::pair<bool, std::string> {
    const long long expected_sizes[] = {504, 4896, 12144};
    const int qs[] = {8, 17, 23};
    std::ostringstream detail;
    for (int idx = 0; idx < 3; ++idx) {
      const int q = qs[idx];
      const auto start = std::chrono::steady_clock::now();
      const auto cert = certify_pgl_two_contractions(q, opts);
      if (cert.status != CertStatus::verified)
        return {false, "q=" + std::to_string(q) + " not verified"};
      if (cert.size != expected_sizes[idx])
        return {false, "q=" + std::to_string(q) + " size " +
                           std::to_string(cert.size)};
      if (!cert.min_hd_exact || *cert.min_hd_exact < q - 5)
        return {false, "q=" + std::to_string(q) + " exact distance too small"};
      detail << "q=" << q << " size=" << cert.size
             << " min_hd=" << *cert.min_hd_exact << " ("
             << seconds_since(start) << " s) ";
    }
    return {true, detail.str()};
  });

  run(2, "example-array-fixtures", [&]() -> std::pair<bool, std::string> {
    const auto p1 = fixture_p1();
    const auto p2 = fixture_p2();
    auto [p1ct, r1] = contract_array(p1, 1, true);
    auto [p2ct, r2] = contract_array(p2, 1, true);
    const bool ok = min_hamming_distance(p1) == 2 && r1.min_hd_after == 3 &&
                    p1ct.size() == 3 && min_hamming_distance(p2) == 3 &&
                    r2.min_hd_after == 2;
    return {ok, "hd(P1)=2 hd(P1^CT)=3 |P1^CT|=3 hd(P2)=3 hd(P2^CT)=2"};
  });

  run(3, "drop-classifier-oracle", [&] {
    return from_suites(
        {selftest::suite_drop_classifier(4), selftest::suite_drop_classifier(5)});
  });

  run(4, "decomposition-prediction-oracle",
      [&] { return from_suites({selftest::suite_chi_prediction(5)}); });

  run(5, "inverse-commutation-and-delta-accounting", [&] {
    return from_suites({selftest::suite_inverse_contraction(5),
                        selftest::suite_inverse_contraction(6),
                        selftest::suite_delta_accounting(5),
                        selftest::suite_delta_accounting(6)});
  });

  run(6, "multi-contraction-bound", [&] {
    return from_suites(
        {selftest::suite_multi_contraction_exhaustive(6, 3),
         selftest::suite_multi_contraction_random(9, 100000, 3, seed)});
  });

  run(7, "odd-cycle-witness",
      [&] { return from_suites({selftest::suite_odd_cycle_witness(6)}); });

  run(8, "hd-increase-biconditional", [&] {
    return from_suites({selftest::suite_hd_increase_random(5, 10000, seed)});
  });

  run(9, "group-sanity",
      [&] { return from_suites({selftest::suite_group_sanity(g_threads)}); });

  run(10, "agl-certificate", [&]() -> std::pair<bool, std::string> {
    const auto cert = certify_agl(17, 2, opts);
    const bool ok = cert.status == CertStatus::verified && cert.size == 272 &&
                    cert.min_hd_exact && *cert.min_hd_exact >= 12;
    std::ostringstream detail;
    detail << "M(15,12) >= 272, exact min hd "
           << (cert.min_hd_exact ? std::to_string(*cert.min_hd_exact) : "n/a");
    return {ok, detail.str()};
  });

  if (g_failures == 0) {
    std::cout << "acceptance: all criteria PASS" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion(s) FAILED"
            << std::endl;
  return 1;
}
