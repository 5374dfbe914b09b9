#include "permcode/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace permcode {

namespace {

void validate_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : images) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("image table entry out of range");
    if (seen[static_cast<size_t>(v)])
      throw std::invalid_argument("image table is not a bijection");
    seen[static_cast<size_t>(v)] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  validate_images(images_);
}

Permutation::Permutation(unchecked_t, std::vector<int> images)
    : images_(std::move(images)) {}

Permutation unchecked_permutation(std::vector<int> images) {
  return Permutation(Permutation::unchecked_t{}, std::move(images));
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<int> images(static_cast<size_t>(degree));
  for (int x = 0; x < degree; ++x) images[static_cast<size_t>(x)] = x;
  return unchecked_permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<int> images(static_cast<size_t>(degree));
  for (int x = 0; x < degree; ++x) images[static_cast<size_t>(x)] = x;
  std::vector<char> used(static_cast<size_t>(degree), 0);
  for (const auto& cycle : cycles) {
    for (int s : cycle) {
      if (s < 0 || s >= degree)
        throw std::invalid_argument("cycle symbol out of range");
      if (used[static_cast<size_t>(s)])
        throw std::invalid_argument("repeated or overlapping cycle symbol");
      used[static_cast<size_t>(s)] = 1;
    }
    const size_t len = cycle.size();
    if (len < 2) continue;  // a 1-cycle is a fixed point
    for (size_t t = 0; t < len; ++t)
      images[static_cast<size_t>(cycle[t])] = cycle[(t + 1) % len];
  }
  return unchecked_permutation(std::move(images));
}

int Permutation::preimage_of(int y) const {
  const int n = degree();
  if (y < 0 || y >= n) throw std::invalid_argument("symbol out of range");
  for (int x = 0; x < n; ++x)
    if (images_[static_cast<size_t>(x)] == y) return x;
  throw std::logic_error("image table is not a bijection");
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[static_cast<size_t>(x)] != x) return false;
  return true;
}

namespace {

void require_equal_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch");
}

}  // namespace

Permutation compose(const Permutation& first, const Permutation& second) {
  require_equal_degree(first, second);
  const int n = first.degree();
  std::vector<int> images(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    images[static_cast<size_t>(x)] = second(first(x));
  return unchecked_permutation(std::move(images));
}

Permutation inverse(const Permutation& sigma) {
  const int n = sigma.degree();
  std::vector<int> images(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) images[static_cast<size_t>(sigma(x))] = x;
  return unchecked_permutation(std::move(images));
}

Permutation quotient(const Permutation& sigma, const Permutation& tau) {
  require_equal_degree(sigma, tau);
  const int n = sigma.degree();
  std::vector<int> images(static_cast<size_t>(n));
  for (int y = 0; y < n; ++y)
    images[static_cast<size_t>(sigma(y))] = tau(y);
  return unchecked_permutation(std::move(images));
}

int hamming_distance(const Permutation& sigma, const Permutation& tau) {
  require_equal_degree(sigma, tau);
  int count = 0;
  for (int x = 0; x < sigma.degree(); ++x)
    if (sigma(x) != tau(x)) ++count;
  return count;
}

int fixed_point_count(const Permutation& sigma) {
  int count = 0;
  for (int x = 0; x < sigma.degree(); ++x)
    if (sigma(x) == x) ++count;
  return count;
}

CycleDecomposition cycle_decomposition(const Permutation& sigma) {
  const int n = sigma.degree();
  CycleDecomposition dec;
  dec.degree = n;
  std::vector<char> visited(static_cast<size_t>(n), 0);
  // Visiting symbols in ascending order makes each cycle start at its
  // minimum and leaves the list sorted by leading symbol.
  for (int x = 0; x < n; ++x) {
    if (visited[static_cast<size_t>(x)] || sigma(x) == x) continue;
    std::vector<int> cycle;
    int y = x;
    do {
      visited[static_cast<size_t>(y)] = 1;
      cycle.push_back(y);
      y = sigma(y);
    } while (y != x);
    dec.cycles.push_back(std::move(cycle));
  }
  return dec;
}

std::vector<int> canonical_cycle(std::vector<int> cycle) {
  if (cycle.size() < 2) return cycle;
  const auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

std::vector<std::vector<int>> canonical_cycle_set(
    std::vector<std::vector<int>> cycles) {
  for (auto& c : cycles) c = canonical_cycle(std::move(c));
  std::sort(cycles.begin(), cycles.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.front() != b.front()) return a.front() < b.front();
              return a < b;
            });
  return cycles;
}

std::string format_image_table(const Permutation& sigma) {
  std::ostringstream out;
  for (int x = 0; x < sigma.degree(); ++x) {
    if (x > 0) out << ' ';
    out << sigma(x);
  }
  return out.str();
}

std::string format_cycles(const CycleDecomposition& dec) {
  if (dec.cycles.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : dec.cycles) {
    out << '(';
    for (size_t t = 0; t < cycle.size(); ++t) {
      if (t > 0) out << ' ';
      out << cycle[t];
    }
    out << ')';
  }
  return out.str();
}

std::string format_cycles(const Permutation& sigma) {
  return format_cycles(cycle_decomposition(sigma));
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    size_t pos = 0;
    int v = std::stoi(token, &pos);
    if (pos != token.size()) throw std::invalid_argument("bad integer token");
    values.push_back(v);
  }
  return values;
}

}  // namespace

Permutation parse_permutation(const std::string& text, int degree) {
  if (text.find('(') == std::string::npos) {
    auto images = parse_int_list(text);
    if (images.empty()) throw std::invalid_argument("empty permutation text");
    if (degree != 0 && degree != static_cast<int>(images.size()))
      throw std::invalid_argument("image table length does not match degree");
    return Permutation(std::move(images));
  }

  std::vector<std::vector<int>> cycles;
  int max_symbol = -1;
  size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (ch != '(') throw std::invalid_argument("expected '(' in cycle notation");
    const size_t close = text.find(')', pos);
    if (close == std::string::npos)
      throw std::invalid_argument("unbalanced '(' in cycle notation");
    std::string body = text.substr(pos + 1, close - pos - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    auto symbols = parse_int_list(body);
    for (int s : symbols) {
      if (s < 0) throw std::invalid_argument("negative cycle symbol");
      max_symbol = std::max(max_symbol, s);
    }
    if (!symbols.empty()) cycles.push_back(std::move(symbols));
    pos = close + 1;
  }
  int n = degree;
  if (n == 0) {
    if (max_symbol < 0)
      throw std::invalid_argument("cannot infer degree of \"()\"; pass a degree");
    n = max_symbol + 1;
  }
  return Permutation::from_cycles(n, cycles);
}

}  // namespace permcode
