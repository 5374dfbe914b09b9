#include "permcode/finite_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace permcode {

namespace {

// Dense polynomials over GF(p), coefficients low-to-high, no trailing zeros.

void trim(std::vector<int>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& mod,
                          int p) {
  const int dm = static_cast<int>(mod.size()) - 1;
  trim(f);
  while (static_cast<int>(f.size()) - 1 >= dm) {
    const int df = static_cast<int>(f.size()) - 1;
    const int lead = f.back();  // mod is monic
    for (int t = 0; t <= dm; ++t) {
      auto& coeff = f[static_cast<size_t>(df - dm + t)];
      coeff = ((coeff - lead * mod[static_cast<size_t>(t)]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a,
                              const std::vector<int>& b,
                              const std::vector<int>& mod, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (size_t s = 0; s < a.size(); ++s)
    for (size_t t = 0; t < b.size(); ++t)
      prod[s + t] = (prod[s + t] + a[s] * b[t]) % p;
  return poly_mod(std::move(prod), mod, p);
}

std::vector<int> poly_pow_mod(std::vector<int> base, long long e,
                              const std::vector<int>& mod, int p) {
  std::vector<int> result{1};
  base = poly_mod(std::move(base), mod, p);
  while (e > 0) {
    if (e & 1) result = poly_mul_mod(result, base, mod, p);
    base = poly_mul_mod(base, base, mod, p);
    e >>= 1;
  }
  return result;
}

std::vector<int> poly_gcd(std::vector<int> a, std::vector<int> b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // reduce a mod b: scale b monic first
    int lead = b.back();
    int inv_lead = 1;
    for (int t = 1; t < p; ++t)
      if (lead * t % p == 1) inv_lead = t;
    std::vector<int> bm = b;
    for (auto& coeff : bm) coeff = coeff * inv_lead % p;
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin's test: f (monic, degree k) is irreducible over GF(p) iff
// x^(p^k) == x (mod f) and gcd(x^(p^(k/l)) - x, f) = 1 for every prime l | k.
bool is_irreducible(const std::vector<int>& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  if (k == 1) return true;

  auto x_power_tower = [&](int height) {
    // x^(p^height) mod f by repeated p-th powering
    std::vector<int> t{0, 1};
    for (int step = 0; step < height; ++step)
      t = poly_pow_mod(std::move(t), p, f, p);
    return t;
  };

  std::vector<int> primes;
  int rest = k;
  for (int l = 2; l * l <= rest; ++l)
    while (rest % l == 0) {
      if (primes.empty() || primes.back() != l) primes.push_back(l);
      rest /= l;
    }
  if (rest > 1) primes.push_back(rest);

  for (int l : primes) {
    std::vector<int> t = x_power_tower(k / l);
    // t - x
    if (t.size() < 2) t.resize(2, 0);
    t[1] = ((t[1] - 1) % p + p) % p;
    trim(t);
    auto g = poly_gcd(f, std::move(t), p);
    if (static_cast<int>(g.size()) - 1 != 0) return false;
  }
  std::vector<int> t = x_power_tower(k);
  if (t.size() < 2) t.resize(2, 0);
  t[1] = ((t[1] - 1) % p + p) % p;
  trim(t);
  return t.empty();
}

}  // namespace

bool FieldSpec::is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> FieldSpec::prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = q;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int k = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, k);
}

FieldSpec::FieldSpec(int p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1) throw std::invalid_argument("field extension degree must be >= 1");
  long long q = 1;
  for (int t = 0; t < k; ++t) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order too large");
  }
  q_ = static_cast<int>(q);

  if (k == 1) {
    modulus_ = {0, 1};  // x
    return;
  }
  // Smallest monic irreducible of degree k: low coefficients counted as a
  // base-p number.
  for (int t = 0; t < q_; ++t) {
    std::vector<int> f(static_cast<size_t>(k + 1), 0);
    int rest = t;
    for (int s = 0; s < k; ++s) {
      f[static_cast<size_t>(s)] = rest % p;
      rest /= p;
    }
    f[static_cast<size_t>(k)] = 1;
    if (is_irreducible(f, p)) {
      modulus_ = std::move(f);
      return;
    }
  }
  throw std::logic_error("no irreducible modulus found");  // unreachable
}

std::vector<int> FieldSpec::unpack(int index) const {
  std::vector<int> digits(static_cast<size_t>(k_), 0);
  for (int s = 0; s < k_; ++s) {
    digits[static_cast<size_t>(s)] = index % p_;
    index /= p_;
  }
  return digits;
}

int FieldSpec::pack(const std::vector<int>& digits) const {
  int index = 0;
  for (int s = k_ - 1; s >= 0; --s) {
    const int coeff =
        s < static_cast<int>(digits.size()) ? digits[static_cast<size_t>(s)] : 0;
    index = index * p_ + coeff;
  }
  return index;
}

namespace {

void check_element(int a, int q) {
  if (a < 0 || a >= q) throw std::invalid_argument("field element out of range");
}

}  // namespace

int FieldSpec::add(int a, int b) const {
  check_element(a, q_);
  check_element(b, q_);
  if (k_ == 1) return (a + b) % p_;
  auto da = unpack(a);
  const auto db = unpack(b);
  for (int s = 0; s < k_; ++s)
    da[static_cast<size_t>(s)] =
        (da[static_cast<size_t>(s)] + db[static_cast<size_t>(s)]) % p_;
  return pack(da);
}

int FieldSpec::neg(int a) const {
  check_element(a, q_);
  if (k_ == 1) return (p_ - a) % p_;
  auto da = unpack(a);
  for (auto& coeff : da) coeff = (p_ - coeff) % p_;
  return pack(da);
}

int FieldSpec::sub(int a, int b) const { return add(a, neg(b)); }

int FieldSpec::mul(int a, int b) const {
  check_element(a, q_);
  check_element(b, q_);
  if (k_ == 1) return a * b % p_;
  auto prod = poly_mul_mod(unpack(a), unpack(b), modulus_, p_);
  return pack(prod);
}

int FieldSpec::pow(int a, long long t) const {
  check_element(a, q_);
  if (t < 0) return pow(inv(a), -t);
  int result = 1;
  int base = a;
  while (t > 0) {
    if (t & 1) result = mul(result, base);
    base = mul(base, base);
    t >>= 1;
  }
  return result;
}

int FieldSpec::inv(int a) const {
  check_element(a, q_);
  if (a == 0) throw std::invalid_argument("zero has no multiplicative inverse");
  return pow(a, q_ - 2);
}

int FieldSpec::frobenius(int a, int i) const {
  check_element(a, q_);
  if (i < 0 || i >= k_)
    throw std::invalid_argument("frobenius exponent out of range");
  long long e = 1;
  for (int s = 0; s < i; ++s) e *= p_;
  return pow(a, e);
}

}  // namespace permcode
