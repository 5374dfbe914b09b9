#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "permcode/perm.hpp"
#include "permcode/selftest.hpp"

using namespace permcode;

namespace {

Permutation perm(const std::string& text, int degree = 0) {
  return parse_permutation(text, degree);
}

}  // namespace

TEST_CASE("identity") {
  CHECK(Permutation::identity(3).images() == std::vector<int>{0, 1, 2});
  CHECK(Permutation::identity(1).images() == std::vector<int>{0});
  CHECK(hamming_distance(Permutation::identity(5), Permutation::identity(5)) == 0);
  CHECK_THROWS_AS(Permutation::identity(0), std::invalid_argument);
}

TEST_CASE("construction validates bijection") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
}

TEST_CASE("compose applies first then second") {
  // apply (0 3) then (1 3): 0 -> 3 -> 1, 1 -> 1 -> 3, 3 -> 0 -> 0
  const auto first = perm("(0 3)", 4);
  const auto second = perm("(1 3)", 4);
  CHECK(compose(first, second).images() == std::vector<int>{1, 3, 2, 0});

  const auto sigma = perm("(0 2 1 3)", 5);
  CHECK(compose(sigma, Permutation::identity(5)) == sigma);
  CHECK(compose(sigma, inverse(sigma)) == Permutation::identity(5));
  CHECK_THROWS_AS(compose(sigma, Permutation::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(inverse(perm("(0 1 2)", 3)) == perm("(0 2 1)", 3));
  CHECK(inverse(Permutation::identity(4)) == Permutation::identity(4));
  CHECK(inverse(perm("(1 4)", 5)) == perm("(1 4)", 5));
}

TEST_CASE("quotient is sigma^-1 tau") {
  const auto sigma = perm("(0 3)", 4);
  const auto tau = perm("(1 3)", 4);
  CHECK(quotient(sigma, tau) == perm("(0 1 3)", 4));
  CHECK(quotient(sigma, sigma) == Permutation::identity(4));
  CHECK(quotient(Permutation::identity(4), tau) == tau);
}

TEST_CASE("cycle decomposition") {
  const auto dec = cycle_decomposition(Permutation({1, 3, 2, 0}));
  CHECK(dec.cycles == std::vector<std::vector<int>>{{0, 1, 3}});
  CHECK(cycle_decomposition(Permutation::identity(5)).cycles.empty());
  CHECK(cycle_decomposition(Permutation({1, 0, 3, 2})).cycles ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("from_cycles") {
  CHECK(Permutation::from_cycles(5, {{1, 4}}).images() ==
        std::vector<int>{0, 4, 2, 3, 1});
  CHECK(Permutation::from_cycles(4, {{0, 1, 2}}).images() ==
        std::vector<int>{1, 2, 0, 3});
  CHECK_THROWS_AS(Permutation::from_cycles(4, {{0, 1}, {1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("hamming distance examples") {
  CHECK(hamming_distance(perm("(0)", 5), perm("(1 4)", 5)) == 2);
  const auto sigma = perm("(0 2 4)", 5);
  CHECK(hamming_distance(sigma, sigma) == 0);
  CHECK(hamming_distance(perm("(0 3)", 4), perm("(1 3)", 4)) == 3);
}

TEST_CASE("fixed points") {
  CHECK(fixed_point_count(Permutation::identity(6)) == 6);
  CHECK(fixed_point_count(perm("(0 1 2)", 4)) == 1);
  CHECK(fixed_point_count(perm("(0 1)(2 3)", 4)) == 0);
}

TEST_CASE("parsing and formatting") {
  CHECK(perm("1 3 2 0") == Permutation({1, 3, 2, 0}));
  CHECK(perm("(0 1 3)(2 4)").degree() == 5);
  CHECK(perm("()", 3) == Permutation::identity(3));
  CHECK(perm("(0)", 5) == Permutation::identity(5));
  CHECK(perm("(0, 1, 3)", 4) == perm("(0 1 3)", 4));
  CHECK_THROWS_AS(perm("(0 0)", 3), std::invalid_argument);
  CHECK_THROWS_AS(perm("()"), std::invalid_argument);
  CHECK_THROWS_AS(perm("1 2 x"), std::invalid_argument);
  CHECK_THROWS_AS(perm("(0 1", 3), std::invalid_argument);
  CHECK_THROWS_AS(perm("0 1 2", 4), std::invalid_argument);

  CHECK(format_image_table(Permutation({1, 3, 2, 0})) == "1 3 2 0");
  CHECK(format_cycles(Permutation({1, 3, 2, 0})) == "(0 1 3)");
  CHECK(format_cycles(Permutation::identity(4)) == "()");

  uint64_t state = 42;
  for (int t = 0; t < 50; ++t) {
    const auto sigma = selftest::random_permutation(7, state);
    CHECK(perm(format_image_table(sigma)) == sigma);
    CHECK(perm(format_cycles(sigma), 7) == sigma);
  }
}

TEST_CASE("canonical cycle helpers") {
  CHECK(canonical_cycle({3, 1, 2}) == std::vector<int>{1, 2, 3});
  const auto set = canonical_cycle_set({{4, 2, 3}, {1, 0}});
  CHECK(set == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});
}
