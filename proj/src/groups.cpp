#include "permcode/groups.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "permcode/finite_field.hpp"

namespace permcode {

bool PermutationArray::contains(const Permutation& sigma) const {
  return std::binary_search(members.begin(), members.end(), sigma);
}

PermutationArray make_array(int degree, std::vector<Permutation> members,
                            std::optional<ArrayProvenance> provenance) {
  if (members.empty())
    throw std::invalid_argument("permutation array must be non-empty");
  for (const auto& sigma : members)
    if (sigma.degree() != degree)
      throw std::invalid_argument("mixed degrees in permutation array");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return PermutationArray{degree, std::move(members), std::move(provenance)};
}

namespace {

FieldSpec field_for(int q) {
  const auto pk = FieldSpec::prime_power(q);
  if (!pk) throw std::invalid_argument("q is not a prime power");
  return FieldSpec(pk->first, pk->second);
}

void check_generation_budget(long long count, int degree) {
  // Keeps a runaway q from exhausting memory; certificates above the exact
  // cutoff never build groups at all.
  if (count * degree > (1LL << 28))
    throw std::invalid_argument("group too large to materialize");
}

std::vector<int> inverse_table(const FieldSpec& F) {
  std::vector<int> inv(static_cast<size_t>(F.q()), 0);
  for (int e = 1; e < F.q(); ++e) inv[static_cast<size_t>(e)] = F.inv(e);
  return inv;
}

// Representatives of PGL(2,q): first nonzero entry of (a,b,c,d) normalized
// to 1, singular matrices dropped.
std::vector<std::array<int, 4>> pgl_matrices(const FieldSpec& F) {
  const int q = F.q();
  std::vector<std::array<int, 4>> reps;
  reps.reserve(static_cast<size_t>(q) * q * q + 1);
  for (int b = 0; b < q; ++b)
    for (int c = 0; c < q; ++c)
      for (int d = 0; d < q; ++d) reps.push_back({1, b, c, d});
  for (int c = 0; c < q; ++c)
    for (int d = 0; d < q; ++d) reps.push_back({0, 1, c, d});
  for (int d = 0; d < q; ++d) reps.push_back({0, 0, 1, d});
  reps.push_back({0, 0, 0, 1});

  std::vector<std::array<int, 4>> valid;
  valid.reserve(reps.size());
  for (const auto& m : reps)
    if (F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2])) != 0) valid.push_back(m);
  return valid;
}

Permutation moebius_permutation(const FieldSpec& F, const std::vector<int>& inv,
                                const std::array<int, 4>& m) {
  const int q = F.q();
  const int infinity = q;
  std::vector<int> images(static_cast<size_t>(q + 1));
  for (int x = 0; x < q; ++x) {
    const int den = F.add(F.mul(m[2], x), m[3]);
    if (den == 0) {
      images[static_cast<size_t>(x)] = infinity;
    } else {
      const int num = F.add(F.mul(m[0], x), m[1]);
      images[static_cast<size_t>(x)] = F.mul(num, inv[static_cast<size_t>(den)]);
    }
  }
  images[static_cast<size_t>(infinity)] =
      m[2] == 0 ? infinity : F.mul(m[0], inv[static_cast<size_t>(m[2])]);
  return Permutation(std::move(images));
}

}  // namespace

PermutationArray agl1(int q) {
  const FieldSpec F = field_for(q);
  check_generation_budget(static_cast<long long>(q) * (q - 1), q);
  std::vector<Permutation> members;
  members.reserve(static_cast<size_t>(q) * (q - 1));
  for (int a = 1; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      std::vector<int> images(static_cast<size_t>(q));
      for (int x = 0; x < q; ++x)
        images[static_cast<size_t>(x)] = F.add(F.mul(a, x), b);
      members.push_back(Permutation(std::move(images)));
    }
  return make_array(q, std::move(members), ArrayProvenance{"agl1", q, 0});
}

PermutationArray pgl2(int q) {
  const FieldSpec F = field_for(q);
  check_generation_budget(static_cast<long long>(q) * (q - 1) * (q + 1), q + 1);
  const auto inv = inverse_table(F);
  const auto matrices = pgl_matrices(F);
  if (static_cast<long long>(matrices.size()) !=
      static_cast<long long>(q) * (q - 1) * (q + 1))
    throw std::logic_error("projective matrix enumeration has the wrong count");
  std::vector<Permutation> members;
  members.reserve(matrices.size());
  for (const auto& m : matrices) members.push_back(moebius_permutation(F, inv, m));
  return make_array(q + 1, std::move(members), ArrayProvenance{"pgl2", q, 0});
}

PermutationArray agammal1(int q) {
  const FieldSpec F = field_for(q);
  const int k = F.k();
  check_generation_budget(static_cast<long long>(k) * q * (q - 1), q);
  std::vector<Permutation> members;
  members.reserve(static_cast<size_t>(k) * q * (q - 1));
  for (int i = 0; i < k; ++i) {
    std::vector<int> frob(static_cast<size_t>(q));
    for (int x = 0; x < q; ++x) frob[static_cast<size_t>(x)] = F.frobenius(x, i);
    for (int a = 1; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        std::vector<int> images(static_cast<size_t>(q));
        for (int x = 0; x < q; ++x)
          images[static_cast<size_t>(x)] =
              F.add(F.mul(a, frob[static_cast<size_t>(x)]), b);
        members.push_back(Permutation(std::move(images)));
      }
  }
  return make_array(q, std::move(members), ArrayProvenance{"agammal1", q, 0});
}

PermutationArray pgammal2(int q) {
  const FieldSpec F = field_for(q);
  const int k = F.k();
  check_generation_budget(static_cast<long long>(k) * q * (q - 1) * (q + 1),
                          q + 1);
  const auto inv = inverse_table(F);
  const auto matrices = pgl_matrices(F);
  std::vector<Permutation> members;
  members.reserve(static_cast<size_t>(k) * matrices.size());
  for (int i = 0; i < k; ++i) {
    // Frobenius acts first, then the Moebius map; infinity stays put.
    std::vector<int> frob(static_cast<size_t>(q + 1));
    for (int x = 0; x < q; ++x) frob[static_cast<size_t>(x)] = F.frobenius(x, i);
    frob[static_cast<size_t>(q)] = q;
    for (const auto& m : matrices) {
      const Permutation mob = moebius_permutation(F, inv, m);
      std::vector<int> images(static_cast<size_t>(q + 1));
      for (int x = 0; x <= q; ++x)
        images[static_cast<size_t>(x)] = mob(frob[static_cast<size_t>(x)]);
      members.push_back(unchecked_permutation(std::move(images)));
    }
  }
  return make_array(q + 1, std::move(members), ArrayProvenance{"pgammal2", q, 0});
}

}  // namespace permcode
