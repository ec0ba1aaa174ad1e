#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "growthcodes/errors.hpp"
#include "growthcodes/reedmuller.hpp"
#include "oracles.hpp"

using namespace growthcodes;

TEST_SUITE("reedmuller") {

TEST_CASE("rm_generator examples") {
  const PrimeField f2(2);
  const LinearCode rep = rm_generator(1, 0);
  CHECK(rep == LinearCode(FieldMatrix::from_ints(f2, {{1, 1}})));

  LinearCode rm31 = rm_generator(3, 1);
  CHECK(rm31.length() == 8);
  CHECK(rm31.dimension() == 4);
  CHECK(min_distance_exhaustive(rm31) == 4);
  // Constant row first, then x_0, x_1, x_2 over points 0..7 with x_t = bit t.
  CHECK(rm31.generator() == FieldMatrix::from_ints(f2, {{1, 1, 1, 1, 1, 1, 1, 1},
                                                        {0, 1, 0, 1, 0, 1, 0, 1},
                                                        {0, 0, 1, 1, 0, 0, 1, 1},
                                                        {0, 0, 0, 0, 1, 1, 1, 1}}));

  LinearCode rm52 = rm_generator(5, 2);
  CHECK(rm52.length() == 32);
  CHECK(rm52.dimension() == 16);
  CHECK(min_distance_exhaustive(rm52) == 8);

  CHECK_THROWS_AS(rm_generator(2, 3), InvalidArgument);
  CHECK_THROWS_AS(rm_generator(21, 1), BudgetExceeded);
}

TEST_CASE("degree-2 monomials come in lexicographic subset order") {
  const LinearCode rm = rm_generator(3, 2);
  REQUIRE(rm.dimension() == 7);
  // x0x1, x0x2, x1x2 evaluated at points 0..7.
  CHECK(rm.generator().row_vector(4) == FieldVector::from_ints(PrimeField(2), {0, 0, 0, 1, 0, 0, 0, 1}));
  CHECK(rm.generator().row_vector(5) == FieldVector::from_ints(PrimeField(2), {0, 0, 0, 0, 0, 1, 0, 1}));
  CHECK(rm.generator().row_vector(6) == FieldVector::from_ints(PrimeField(2), {0, 0, 0, 0, 0, 0, 1, 1}));
}

TEST_CASE("parity-check oracle") {
  const LinearCode rm31 = rm_generator(3, 1);
  const FieldMatrix h = oracle::parity_check(rm31.generator());
  CHECK(h.rows() == 4);
  CHECK(rank(h) == 4);
  const FieldMatrix zero = rm31.generator() * h.transpose();
  CHECK(zero == FieldMatrix::zero(PrimeField(2), 4, 4));
  CHECK(oracle::dual_min_distance(rm31.generator()) == 4);
}

TEST_CASE("rm_params examples") {
  CHECK(rm_params(3, 1).kd_over_n == 2);
  const RMParams d3 = rm_params(7, 3);
  CHECK(d3.params.n == 128);
  CHECK(d3.params.k == 64);
  CHECK(d3.params.d == 16);
  CHECK(d3.kd_over_n == 8);
  for (std::uint64_t m = 0; m <= 10; ++m) {
    const RMParams p = rm_params(m, 0);
    CHECK(p.params.k == 1);
    CHECK(p.params.d == p.params.n);
    CHECK(p.kd_over_n == 1);
  }
}

TEST_CASE("brute-forced parameters for m <= 5") {
  for (std::uint64_t m = 0; m <= 5; ++m) {
    for (std::uint64_t r = 0; r <= m; ++r) {
      LinearCode c = rm_generator(m, r);
      const RMParams p = rm_params(m, r);
      CAPTURE(m);
      CAPTURE(r);
      CHECK(c.dimension() == p.params.k);
      if (message_space_size(c) <= SearchOptions{}.budget) {
        CHECK(min_distance_exhaustive(c) == p.params.d);
      } else {
        CHECK_THROWS_AS(min_distance_exhaustive(c), BudgetExceeded);
      }
      if (c.dimension() <= 10) CHECK(oracle::brute_min_distance(c.generator()) == p.params.d);
      if (c.length() - c.dimension() <= 6) CHECK(oracle::dual_min_distance(c.generator()) == p.params.d);
    }
  }
}

TEST_CASE("diagonal subsequence has kd/n = sqrt(k)") {
  for (std::uint64_t r = 0; r <= 10; ++r) {
    const RMParams p = rm_diagonal(r);
    CHECK(p.params.k == ipow(2, 2 * r));
    CHECK(p.kd_over_n == ipow(2, r));
    CHECK(p.kd_over_n * p.kd_over_n == Rational(p.params.k));
  }
}

TEST_CASE("binomial routines") {
  for (std::uint64_t r = 0; r <= 20; ++r) {
    BigInt total = 0;
    for (std::uint64_t j = 0; j <= 2 * r + 1; ++j) total += binomial(2 * r + 1, j);
    CHECK(total == ipow(2, 2 * r + 1));
    CHECK(binomial_prefix_sum(2 * r + 1, r) == ipow(2, 2 * r));
  }
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial_prefix_sum(4, 9) == 16);
}

TEST_CASE("rm_third_series small members") {
  const RMThirdRecord m3 = rm_third_series(3);
  CHECK(m3.rm.r == 2);
  CHECK(m3.rm.params == CodeParams{8, 7, 2, std::nullopt});
  CHECK(m3.rm.kd_over_n == Rational(7, 4));

  const RMThirdRecord m6 = rm_third_series(6);
  CHECK(m6.rm.params == CodeParams{64, 42, 8, std::nullopt});
  CHECK(m6.rm.kd_over_n == Rational(21, 4));

  const RMThirdRecord m1 = rm_third_series(1);
  CHECK(m1.rm.r == 1);
  CHECK(m1.rm.kd_over_n == 1);
  CHECK_THROWS_AS(rm_third_series(0), InvalidArgument);
}

TEST_CASE("rm_third_series matches frozen table and stabilizes") {
  std::ifstream in(std::string(GROWTHCODES_GOLDEN_DIR) + "/rm_third.csv");
  REQUIRE(in);
  std::string line;
  std::getline(in, line);
  CHECK(line == "m,r,k,kd_over_n_num,kd_over_n_den,ratio");

  std::vector<double> ratios(1);
  std::uint64_t rows = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string m, r, k, num, den, ratio;
    std::getline(ls, m, ',');
    std::getline(ls, r, ',');
    std::getline(ls, k, ',');
    std::getline(ls, num, ',');
    std::getline(ls, den, ',');
    std::getline(ls, ratio, ',');
    const std::uint64_t mi = std::stoull(m);
    const RMThirdRecord rec = rm_third_series(mi);
    CAPTURE(mi);
    CHECK(rec.rm.r == std::stoull(r));
    CHECK(rec.rm.params.k == BigInt(k));
    CHECK(rec.rm.kd_over_n == Rational(BigInt(num), BigInt(den)));
    const double want = std::stod(ratio);
    CHECK(std::abs(rec.asymptote_ratio - want) <= 1e-12 * want);
    ratios.push_back(rec.asymptote_ratio);
    ++rows;
  }
  REQUIRE(rows == 1000);

  // Per residue class of m mod 3: increasing from m = 30 on, within 0.006 of
  // 1 at the end, and m (1 - ratio) flat over the tail.
  for (std::uint64_t cls = 0; cls < 3; ++cls) {
    std::uint64_t last = 0;
    double lo = 1e300, hi = 0;
    for (std::uint64_t m = 30 + cls; m <= 1000; m += 3) {
      if (m + 3 <= 1000) CHECK(ratios[m + 3] > ratios[m]);
      CHECK(ratios[m] < 1.0);
      last = m;
      if (m >= 850) {
        const double scaled = static_cast<double>(m) * (1.0 - ratios[m]);
        lo = std::min(lo, scaled);
        hi = std::max(hi, scaled);
      }
    }
    CHECK(1.0 - ratios[last] < 0.006);
    CHECK((hi - lo) / hi < 0.005);
  }
}

}
