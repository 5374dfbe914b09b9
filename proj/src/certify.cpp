#include "permcode/certify.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "permcode/finite_field.hpp"

namespace permcode {

namespace {

bool all_pass(const std::vector<Hypothesis>& hypotheses) {
  for (const auto& h : hypotheses)
    if (!h.pass) return false;
  return true;
}

std::string mod_text(const std::string& value, int modulus) {
  std::ostringstream out;
  out << value << " !== 0,1 (mod " << modulus << ")";
  return out.str();
}

void add_divisibility_hypotheses(std::vector<Hypothesis>& hypotheses,
                                 const std::string& label, long long value,
                                 int m) {
  for (int i = 1; i <= m; ++i) {
    const int ell = 2 * i + 1;
    const long long rem = value % ell;
    hypotheses.push_back({mod_text(label, ell), rem != 0 && rem != 1});
  }
}

std::vector<int> modulus_of(int q) {
  const auto pk = FieldSpec::prime_power(q);
  if (!pk) return {};
  return FieldSpec(pk->first, pk->second).modulus();
}

// Builds the group, contracts, and settles the certificate status. The
// bound theorems are the proof; the exact distance is extra evidence, so
// past the cutoff the group is never materialized at all.
void finish_with_group(BoundCertificate& cert,
                       const std::function<PermutationArray()>& build_group,
                       const CertifyOptions& opts) {
  if (cert.size > opts.exact_cutoff) {
    cert.status = CertStatus::verified;
    return;
  }
  auto [contracted, report] =
      contract_array(build_group(), cert.m, false, opts.threads);
  (void)report;
  if (static_cast<long long>(contracted.size()) != cert.size) {
    cert.status = CertStatus::bound_violated;
    return;
  }
  const int exact = min_hamming_distance(contracted, opts.threads);
  cert.min_hd_exact = exact;
  cert.status = exact >= cert.claimed_d ? CertStatus::verified
                                        : CertStatus::bound_violated;
}

}  // namespace

BoundCertificate certify_agl(int q, int m, const CertifyOptions& opts) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  BoundCertificate cert;
  cert.family = Family::AGL1;
  cert.q = q;
  cert.m = m;
  cert.n = q - m;
  cert.claimed_d = q - 2 * m - 1;
  cert.size = static_cast<long long>(q) * (q - 1);
  cert.field_modulus = modulus_of(q);

  const auto pk = FieldSpec::prime_power(q);
  cert.hypotheses.push_back({"q is a prime power", pk.has_value()});
  cert.hypotheses.push_back({"q > 2m+1", q > 2 * m + 1});
  add_divisibility_hypotheses(cert.hypotheses, "q", q, m);

  if (!all_pass(cert.hypotheses)) {
    cert.status = CertStatus::hypothesis_failed;
    return cert;
  }
  finish_with_group(cert, [q] { return agl1(q); }, opts);
  return cert;
}

BoundCertificate certify_pgl_two_contractions(int q,
                                              const CertifyOptions& opts) {
  BoundCertificate cert;
  cert.family = Family::PGL2;
  cert.q = q;
  cert.m = 2;
  cert.n = q - 1;
  cert.claimed_d = q - 5;
  cert.size = static_cast<long long>(q) * (q - 1) * (q + 1);
  cert.field_modulus = modulus_of(q);

  const auto pk = FieldSpec::prime_power(q);
  cert.hypotheses.push_back({"q is a prime power", pk.has_value()});
  cert.hypotheses.push_back({"q > 5", q > 5});
  cert.hypotheses.push_back({"q == 2 (mod 3)", q % 3 == 2});
  cert.hypotheses.push_back({mod_text("q", 5), q % 5 != 0 && q % 5 != 1});

  if (!all_pass(cert.hypotheses)) {
    cert.status = CertStatus::hypothesis_failed;
    return cert;
  }
  finish_with_group(cert, [q] { return pgl2(q); }, opts);
  if (cert.status == CertStatus::verified)
    cert.companion = CompanionBound{q - 2, q - 5,
                                    static_cast<long long>(q) * (q + 1)};
  return cert;
}

BoundCertificate certify_semilinear(int q, int m, bool projective,
                                    const CertifyOptions& opts) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const auto pk = FieldSpec::prime_power(q);
  if (!pk || pk->second < 2)
    throw std::invalid_argument("q must be p^k with k >= 2");
  const int p = pk->first;
  const int k = pk->second;

  int smallest_prime_factor = k;
  for (int d = 2; d * d <= k; ++d)
    if (k % d == 0) {
      smallest_prime_factor = d;
      break;
    }
  const int k_star = k / smallest_prime_factor;  // largest proper divisor
  int p_kstar = 1;
  for (int s = 0; s < k_star; ++s) p_kstar *= p;

  BoundCertificate cert;
  cert.family = projective ? Family::PGammaL2 : Family::AGammaL1;
  cert.q = q;
  cert.m = m;
  cert.n = (projective ? q + 1 : q) - m;
  cert.claimed_d = q - p_kstar - 2 * m;
  cert.size = static_cast<long long>(k) * q * (q - 1) * (projective ? q + 1 : 1);
  cert.field_modulus = modulus_of(q);

  cert.hypotheses.push_back({"q - p^k* - 2m > 0", cert.claimed_d > 0});
  // Here the divisor test is on the group order itself, so only residue 0
  // is excluded.
  const long long order = static_cast<long long>(k) * q * (q - 1);
  for (int i = 1; i <= m; ++i) {
    const int ell = 2 * i + 1;
    std::ostringstream text;
    text << "k*q*(q-1) !== 0 (mod " << ell << ")";
    cert.hypotheses.push_back({text.str(), order % ell != 0});
  }
  if (projective)
    cert.hypotheses.push_back(
        {"q+1-3m >= q-p^k*-2m", q + 1 - 3 * m >= cert.claimed_d});

  if (!all_pass(cert.hypotheses)) {
    cert.status = CertStatus::hypothesis_failed;
    return cert;
  }
  finish_with_group(
      cert, [q, projective] { return projective ? pgammal2(q) : agammal1(q); },
      opts);
  return cert;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::AGL1: return "AGL1";
    case Family::PGL2: return "PGL2";
    case Family::AGammaL1: return "AGammaL1";
    case Family::PGammaL2: return "PGammaL2";
  }
  return "?";
}

std::string status_name(CertStatus status) {
  switch (status) {
    case CertStatus::verified: return "verified";
    case CertStatus::hypothesis_failed: return "hypothesis_failed";
    case CertStatus::bound_violated: return "bound_violated";
  }
  return "?";
}

std::string to_json_line(const BoundCertificate& cert) {
  nlohmann::ordered_json j;
  j["family"] = family_name(cert.family);
  j["q"] = cert.q;
  j["m"] = cert.m;
  j["n"] = cert.n;
  j["claimed_d"] = cert.claimed_d;
  j["size"] = cert.size;
  if (cert.min_hd_exact) j["min_hd_exact"] = *cert.min_hd_exact;
  j["hypotheses"] = nlohmann::ordered_json::array();
  for (const auto& h : cert.hypotheses)
    j["hypotheses"].push_back({{"text", h.text}, {"pass", h.pass}});
  j["field_modulus"] = cert.field_modulus;
  j["status"] = status_name(cert.status);
  if (cert.companion)
    j["companion"] = {{"n", cert.companion->n},
                      {"d", cert.companion->d},
                      {"size", cert.companion->size}};
  return j.dump();
}

std::string csv_header() { return "q,n,d,size,status"; }

std::string to_csv_row(const BoundCertificate& cert) {
  std::ostringstream out;
  out << cert.q << ',' << cert.n << ',' << cert.claimed_d << ',' << cert.size
      << ',' << status_name(cert.status);
  return out.str();
}

}  // namespace permcode
