#pragma once

#include <string>
#include <vector>

namespace permcode {

/// A permutation of the symbols {0, ..., n-1}, stored as its image table:
/// images()[x] is the image of x. Values are immutable after construction,
/// so they can be shared and copied freely across threads.
class Permutation {
 public:
  /// Validates that `images` is a bijection on {0, ..., n-1} with n >= 1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  /// Builds a permutation from disjoint cycles. Fixed points may be omitted;
  /// length-1 cycles are accepted and ignored. Throws std::invalid_argument
  /// on out-of-range symbols, a repeated symbol, or overlapping cycles.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  /// The unique x with (*this)(x) == y. Linear scan; fine at desk scale.
  int preimage_of(int y) const;

  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  struct unchecked_t {};
  Permutation(unchecked_t, std::vector<int> images);

  std::vector<int> images_;

  friend Permutation unchecked_permutation(std::vector<int> images);
};

/// Constructs without the bijection check. Internal fast path for callers
/// that produce valid image tables by construction.
Permutation unchecked_permutation(std::vector<int> images);

/// result(x) = second(first(x)): apply `first`, then `second`.
/// Compositions are order-explicit throughout; there is no operator*.
Permutation compose(const Permutation& first, const Permutation& second);

Permutation inverse(const Permutation& sigma);

/// sigma^{-1} tau under the left-to-right convention:
/// result(x) = tau(sigma^{-1}(x)). Its fixed points are exactly the images
/// under sigma of the positions where sigma and tau agree.
Permutation quotient(const Permutation& sigma, const Permutation& tau);

/// Number of symbols x with sigma(x) != tau(x).
int hamming_distance(const Permutation& sigma, const Permutation& tau);

int fixed_point_count(const Permutation& sigma);

/// Disjoint-cycle form with fixed points omitted. Canonical: each cycle is
/// rotated so its minimum symbol comes first, and cycles are sorted
/// ascending by leading symbol. The identity has an empty cycle list and,
/// by convention, length zero.
struct CycleDecomposition {
  int degree = 0;
  std::vector<std::vector<int>> cycles;

  bool operator==(const CycleDecomposition&) const = default;
};

CycleDecomposition cycle_decomposition(const Permutation& sigma);

/// Rotates a cycle so its minimum symbol comes first.
std::vector<int> canonical_cycle(std::vector<int> cycle);

/// Canonicalizes every cycle and sorts the list by leading symbol.
std::vector<std::vector<int>> canonical_cycle_set(
    std::vector<std::vector<int>> cycles);

// Text forms. Image tables are the fixture format (one permutation per
// line, space-separated); cycle form is for display.
std::string format_image_table(const Permutation& sigma);
std::string format_cycles(const Permutation& sigma);  // "(0 1 3)(2 4)", "()" for identity
std::string format_cycles(const CycleDecomposition& dec);

/// Parses either cycle notation "(0 1 3)(2 4)" or an image table "1 3 2 0".
/// `degree` pins the degree when cycle notation omits trailing fixed points
/// (required for "()" and "(0)"); 0 means infer from the text.
Permutation parse_permutation(const std::string& text, int degree = 0);

}  // namespace permcode
