#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "permcode/certify.hpp"
#include "permcode/contraction.hpp"
#include "permcode/distance.hpp"

using namespace permcode;

namespace {

Permutation perm(const std::string& text, int degree = 0) {
  return parse_permutation(text, degree);
}

PermutationArray fixture_p1() {
  return make_array(5, {Permutation::identity(5), perm("(1 4)", 5),
                        perm("(0 1 2)", 5), perm("(1 2 3)", 5)});
}

PermutationArray fixture_p2() {
  return make_array(4, {perm("(0 1 2)", 4), perm("(1 2 3)", 4)});
}

}  // namespace

TEST_CASE("minimum distance on the example arrays") {
  CHECK(min_hamming_distance(fixture_p1()) == 2);
  CHECK(min_hamming_distance(fixture_p2()) == 3);

  auto [p1ct, report] = contract_array(fixture_p1(), 1, true);
  CHECK(p1ct.size() == 3);
  CHECK(report.duplicates_merged == 1);
  CHECK(report.min_hd_before == 2);
  CHECK(report.min_hd_after == 3);

  auto [p2ct, report2] = contract_array(fixture_p2(), 1, true);
  CHECK(p2ct.size() == 2);
  CHECK(report2.min_hd_after == 2);

  CHECK_THROWS_AS(min_hamming_distance(make_array(3, {Permutation::identity(3)})),
                  std::invalid_argument);
}

TEST_CASE("brute force is thread-count independent") {
  const auto G = agl1(8);
  CHECK(min_hamming_distance(G, 1) == 7);
  CHECK(min_hamming_distance(G, 3) == 7);
}

TEST_CASE("group shortcut agrees with brute force") {
  CHECK(group_min_distance(agl1(7)) == 6);
  CHECK(group_min_distance(pgl2(5)) == 4);
  CHECK(group_min_distance(pgl2(8)) == 7);
  CHECK(min_hamming_distance(pgl2(8)) == 7);

  // not quotient-closed: {id, (0 1 2)} misses the inverse
  const auto broken = make_array(4, {Permutation::identity(4), perm("(0 1 2)", 4)});
  CHECK_THROWS_AS(group_min_distance(broken), std::domain_error);
  CHECK(group_min_distance(broken, /*trust_closure=*/true) == 3);
}

TEST_CASE("contract_array composes") {
  const auto G = agl1(5);
  auto [once, r1] = contract_array(G, 1);
  CHECK(once.size() == 20);
  CHECK(r1.duplicates_merged == 0);
  auto [twice_chained, r2] = contract_array(once, 1);
  auto [twice_direct, r3] = contract_array(G, 2);
  CHECK(twice_chained.members == twice_direct.members);
  CHECK(once.provenance->contractions == 1);
  CHECK(twice_direct.provenance->contractions == 2);
  CHECK_THROWS_AS(contract_array(G, 5), std::invalid_argument);
}

TEST_CASE("size preservation below d/3") {
  CHECK(verify_size_preservation(agl1(7), 1));
  CHECK(verify_size_preservation(pgl2(8), 2));
  CHECK(verify_size_preservation(fixture_p2(), 1));  // vacuous: 3m >= d
}

TEST_CASE("hd increase conditions") {
  const auto up = check_hd_increase_conditions(fixture_p1());
  CHECK(up.condition1);
  CHECK(up.condition2);
  CHECK(up.increased);

  const auto down = check_hd_increase_conditions(fixture_p2());
  CHECK_FALSE(down.increased);
  CHECK(down.increased == (down.condition1 && down.condition2));

  // distance >= 4 never increases after one contraction
  const auto steady = check_hd_increase_conditions(agl1(7));
  CHECK_FALSE(steady.increased);
}

TEST_CASE("array contraction bound") {
  const auto good = verify_array_contraction_bound(agl1(17), 2);
  CHECK(good.hypothesis_holds);
  CHECK(good.conclusions_hold);

  const auto rejected = verify_array_contraction_bound(agl1(7), 1);
  CHECK_FALSE(rejected.hypothesis_holds);
  CHECK(rejected.ok());
}

TEST_CASE("agl certificates") {
  const auto cert = certify_agl(17, 2);
  CHECK(cert.status == CertStatus::verified);
  CHECK(cert.n == 15);
  CHECK(cert.claimed_d == 12);
  CHECK(cert.size == 272);
  REQUIRE(cert.min_hd_exact.has_value());
  CHECK(*cert.min_hd_exact >= 12);
  CHECK(cert.field_modulus == std::vector<int>{0, 1});

  const auto failed = certify_agl(7, 1);
  CHECK(failed.status == CertStatus::hypothesis_failed);
  CHECK_FALSE(failed.min_hd_exact.has_value());

  const auto small = certify_agl(8, 1);
  CHECK(small.status == CertStatus::verified);
  CHECK(small.n == 7);
  CHECK(small.claimed_d == 5);
  CHECK(small.size == 56);

  const auto bad_q = certify_agl(6, 1);
  CHECK(bad_q.status == CertStatus::hypothesis_failed);
  CHECK_FALSE(bad_q.hypotheses.front().pass);
}

TEST_CASE("pgl certificates") {
  const auto cert = certify_pgl_two_contractions(8);
  CHECK(cert.status == CertStatus::verified);
  CHECK(cert.size == 504);
  CHECK(cert.n == 7);
  CHECK(cert.claimed_d == 3);
  REQUIRE(cert.min_hd_exact.has_value());
  CHECK(*cert.min_hd_exact >= 3);
  REQUIRE(cert.companion.has_value());
  CHECK(cert.companion->n == 6);
  CHECK(cert.companion->d == 3);
  CHECK(cert.companion->size == 72);

  CHECK(certify_pgl_two_contractions(7).status == CertStatus::hypothesis_failed);
  CHECK(certify_pgl_two_contractions(9).status == CertStatus::hypothesis_failed);
  CHECK(certify_pgl_two_contractions(5).status == CertStatus::hypothesis_failed);
}

TEST_CASE("semilinear certificates") {
  CHECK(certify_semilinear(4, 1, false).status == CertStatus::hypothesis_failed);
  CHECK(certify_semilinear(16, 1, false).status == CertStatus::hypothesis_failed);
  CHECK(certify_semilinear(8, 1, false).status == CertStatus::hypothesis_failed);
  CHECK_THROWS_AS(certify_semilinear(7, 1, false), std::invalid_argument);
  CHECK_THROWS_AS(certify_semilinear(12, 1, false), std::invalid_argument);

  // q = 32: k = 5, k* = 1; 5*32*31 has no odd divisor 3
  const auto affine = certify_semilinear(32, 1, false);
  CHECK(affine.status == CertStatus::verified);
  CHECK(affine.n == 31);
  CHECK(affine.claimed_d == 28);
  CHECK(affine.size == 4960);
  REQUIRE(affine.min_hd_exact.has_value());
  CHECK(*affine.min_hd_exact >= 28);

  // projective variant exceeds the exact cutoff: theorem-backed only
  const auto projective = certify_semilinear(32, 1, true);
  CHECK(projective.status == CertStatus::verified);
  CHECK(projective.size == 163680);
  CHECK(projective.n == 32);
  CHECK_FALSE(projective.min_hd_exact.has_value());
}

TEST_CASE("certificate serialization") {
  const auto cert = certify_agl(8, 1);
  const auto parsed = nlohmann::json::parse(to_json_line(cert));
  CHECK(parsed["family"] == "AGL1");
  CHECK(parsed["q"] == 8);
  CHECK(parsed["m"] == 1);
  CHECK(parsed["n"] == 7);
  CHECK(parsed["claimed_d"] == 5);
  CHECK(parsed["size"] == 56);
  CHECK(parsed["status"] == "verified");
  CHECK(parsed["min_hd_exact"].get<int>() >= 5);
  CHECK(parsed["field_modulus"] == nlohmann::json({1, 1, 0, 1}));
  CHECK(parsed["hypotheses"].is_array());
  for (const auto& h : parsed["hypotheses"]) {
    CHECK(h.contains("text"));
    CHECK(h["pass"].is_boolean());
  }
  CHECK(to_csv_row(cert) == "8,7,5,56,verified");
  CHECK(csv_header() == "q,n,d,size,status");
}

TEST_CASE("certificate soundness invariant") {
  for (const auto& cert :
       {certify_agl(17, 2), certify_agl(8, 1), certify_pgl_two_contractions(8),
        certify_agl(7, 1), certify_pgl_two_contractions(9)}) {
    if (cert.status != CertStatus::verified) continue;
    CHECK(cert.claimed_d > 0);
    for (const auto& h : cert.hypotheses) CHECK(h.pass);
    if (cert.min_hd_exact) CHECK(*cert.min_hd_exact >= cert.claimed_d);
  }
}
