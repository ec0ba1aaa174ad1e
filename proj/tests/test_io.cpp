#include <doctest.h>

#include <random>
#include <sstream>

#include "growthcodes/errors.hpp"
#include "growthcodes/io.hpp"
#include "growthcodes/seeds.hpp"
#include "oracles.hpp"

using namespace growthcodes;

namespace {

LinearCode parse(const std::string& text) {
  std::istringstream in(text);
  return read_code(in);
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("writes the documented layout") {
  const LinearCode c2 = seed_code(PrimeField(3), 2);
  CHECK(to_text(c2.generator()) == "3 4 3\n0 1 2 1\n2 0 1 2\n1 2 0 1\n");
}

TEST_CASE("reads with or without a trailing newline") {
  const LinearCode a = parse("2 4 2\n1 1 0 0\n0 0 1 1\n");
  const LinearCode b = parse("2 4 2\n1 1 0 0\n0   0 1 1");
  CHECK(a == b);
  CHECK(a.length() == 4);
  CHECK(a.dimension() == 2);
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("2 4 2\n1 1 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse("2 2 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("2 2 1\n1 -1\n"), ParseError);
  CHECK_THROWS_AS(parse("2 2 1\n1 1\n5\n"), ParseError);
  CHECK_THROWS_AS(parse("4 2 1\n1 1\n"), CompositeModulus);
  CHECK_THROWS_AS(parse("2 4 2\n1 1 0 0\n0 0 0 0\n"), DependentBasis);
}

TEST_CASE("write then read reproduces the code byte for byte") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    const auto shape = oracle::random_shape(rng, 16, 20);
    const LinearCode c = oracle::random_code(PrimeField(shape.q), shape.k, shape.n, rng);
    const std::string text = to_text(c.generator());
    const LinearCode back = parse(text);
    CHECK(back == c);
    CHECK(to_text(back.generator()) == text);
  }
}

}
