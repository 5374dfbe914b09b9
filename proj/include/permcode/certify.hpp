#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permcode/distance.hpp"

namespace permcode {

enum class Family { AGL1, PGL2, AGammaL1, PGammaL2 };

enum class CertStatus { verified, hypothesis_failed, bound_violated };

struct Hypothesis {
  std::string text;
  bool pass = false;
};

struct CompanionBound {
  int n = 0;
  int d = 0;
  long long size = 0;
};

/// Machine-checkable record "M(n,d) >= size" for a contracted group family,
/// with the hypothesis audit trail and the field modulus needed to
/// reproduce the symbol labeling. When status is verified, all hypotheses
/// pass, size equals the family formula, and min_hd_exact (when present)
/// is at least claimed_d.
struct BoundCertificate {
  Family family = Family::AGL1;
  int q = 0;
  int m = 0;
  int n = 0;
  int claimed_d = 0;
  long long size = 0;
  std::optional<int> min_hd_exact;
  std::vector<Hypothesis> hypotheses;
  std::vector<int> field_modulus;
  CertStatus status = CertStatus::hypothesis_failed;
  std::optional<CompanionBound> companion;
};

struct CertifyOptions {
  /// Exact minimum-distance computation runs only for arrays up to this
  /// many members; larger certificates rest on the bound theorems alone.
  long long exact_cutoff = 30000;
  int threads = 0;
};

/// M(q-m, q-2m-1) >= q(q-1) from m contractions of AGL(1,q), under
/// q > 2m+1 and q !== 0,1 (mod 2i+1) for i = 1..m. All failure modes are
/// statuses; a non-prime-power q fails its hypothesis.
BoundCertificate certify_agl(int q, int m, const CertifyOptions& opts = {});

/// M(q-1, q-5) >= q(q-1)(q+1) from two contractions of PGL(2,q), under
/// q > 5, q == 2 (mod 3), q !== 0,1 (mod 5). On success also carries the
/// companion bound M(q-2, q-5) >= q(q+1).
BoundCertificate certify_pgl_two_contractions(int q,
                                              const CertifyOptions& opts = {});

/// Semilinear families, q = p^k with k >= 2 (throws otherwise). With k* the
/// largest proper divisor of k: affine claims
/// M(q-m, q-p^k*-2m) >= k*q*(q-1); projective claims
/// M(q+1-m, q-p^k*-2m) >= k*q*(q-1)*(q+1) and additionally requires
/// q+1-3m >= q-p^k*-2m.
BoundCertificate certify_semilinear(int q, int m, bool projective,
                                    const CertifyOptions& opts = {});

std::string family_name(Family family);
std::string status_name(CertStatus status);

/// One-line JSON object: {family, q, m, n, claimed_d, size, min_hd_exact?,
/// hypotheses: [{text, pass}], field_modulus, status, companion?}.
std::string to_json_line(const BoundCertificate& cert);

/// CSV row "q,n,d,size,status" (header: csv_header()).
std::string to_csv_row(const BoundCertificate& cert);
std::string csv_header();

}  // namespace permcode
