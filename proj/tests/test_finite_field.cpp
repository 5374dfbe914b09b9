#include <doctest.h>

#include <stdexcept>

#include "permcode/finite_field.hpp"

using permcode::FieldSpec;

TEST_CASE("modulus selection") {
  CHECK(FieldSpec(2, 2).modulus() == std::vector<int>{1, 1, 1});   // x^2+x+1
  CHECK(FieldSpec(3, 2).modulus() == std::vector<int>{1, 0, 1});   // x^2+1
  CHECK(FieldSpec(5, 1).modulus() == std::vector<int>{0, 1});      // x
  CHECK(FieldSpec(2, 3).modulus() == std::vector<int>{1, 1, 0, 1});  // x^3+x+1
}

TEST_CASE("prime field arithmetic") {
  const FieldSpec F(5, 1);
  CHECK(F.mul(3, 4) == 2);
  CHECK(F.add(3, 4) == 2);
  CHECK(F.sub(1, 3) == 3);
  const FieldSpec G(7, 1);
  CHECK(G.inv(3) == 5);
  CHECK(G.pow(3, -1) == 5);
}

TEST_CASE("GF(4) arithmetic") {
  const FieldSpec F(2, 2);
  CHECK(F.mul(2, 2) == 3);  // x * x = x + 1
  CHECK(F.frobenius(2, 1) == 3);
  CHECK(F.frobenius(2, 0) == 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(F.frobenius(0, i) == 0);
    CHECK(F.frobenius(1, i) == 1);
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(FieldSpec(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(2, 15), std::invalid_argument);
  CHECK_NOTHROW(FieldSpec(2, 14));
  const FieldSpec F(3, 1);
  CHECK_THROWS_AS(F.inv(0), std::invalid_argument);
  CHECK_THROWS_AS(F.frobenius(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(F.add(1, 3), std::invalid_argument);
}

TEST_CASE("prime power decomposition") {
  CHECK(FieldSpec::prime_power(8) == std::make_pair(2, 3));
  CHECK(FieldSpec::prime_power(7) == std::make_pair(7, 1));
  CHECK(FieldSpec::prime_power(9) == std::make_pair(3, 2));
  CHECK_FALSE(FieldSpec::prime_power(12).has_value());
  CHECK_FALSE(FieldSpec::prime_power(1).has_value());
  CHECK_FALSE(FieldSpec::prime_power(0).has_value());
}
