#include <doctest.h>

#include <random>

#include "growthcodes/errors.hpp"
#include "growthcodes/field.hpp"

using namespace growthcodes;

TEST_SUITE("field") {

TEST_CASE("make_field accepts primes and rejects composites") {
  CHECK(make_field(2).modulus() == 2);
  CHECK(make_field(5).modulus() == 5);
  CHECK_THROWS_AS(make_field(6), CompositeModulus);
  CHECK_THROWS_AS(make_field(1), CompositeModulus);
  CHECK_THROWS_AS(make_field(0), CompositeModulus);
  CHECK(make_field(2147483647).modulus() == 2147483647U);
  CHECK_THROWS_AS(make_field(4294967311ULL), InvalidArgument);
}

TEST_CASE("element arithmetic examples") {
  const PrimeField f5(5);
  CHECK(add(f5.element(2), f5.element(4)) == f5.element(1));
  CHECK(inv(f5.element(3)) == f5.element(2));
  const PrimeField f2(2);
  CHECK(neg(f2.element(1)) == f2.element(1));
  CHECK(f5.element(-1).value() == 4);
  CHECK(sub(f5.element(1), f5.element(3)) == f5.element(3));
}

TEST_CASE("errors") {
  const PrimeField f5(5), f7(7);
  CHECK_THROWS_AS(inv(f5.zero()), DivisionByZero);
  CHECK_THROWS_AS(f5.element(1) + f7.element(1), FieldMismatch);
  CHECK_THROWS_AS(mul(f5.element(1), f7.element(1)), FieldMismatch);
  CHECK_THROWS_AS(FieldElement(f5, 5), InvalidArgument);
  CHECK_FALSE(f5.element(1) == f7.element(1));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(0xF1E1D);
  for (std::uint64_t p : {2, 3, 5, 7, 101}) {
    const PrimeField f(p);
    std::uniform_int_distribution<std::int64_t> dist(0, static_cast<std::int64_t>(p) - 1);
    for (int trial = 0; trial < 500; ++trial) {
      const auto a = f.element(dist(rng)), b = f.element(dist(rng)), c = f.element(dist(rng));
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + f.zero() == a);
      CHECK(a * f.one() == a);
      CHECK(a + (-a) == f.zero());
      if (a.value() != 0) CHECK(a * inv(a) == f.one());
    }
  }
}

TEST_CASE("every nonzero residue has an inverse, p <= 101") {
  for (std::uint64_t p = 2; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    const PrimeField f(p);
    for (Residue a = 1; a < p; ++a) REQUIRE(f.mul(a, f.inv(a)) == 1);
  }
}

}
