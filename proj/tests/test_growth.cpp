#include <doctest.h>

#include <sstream>

#include "growthcodes/errors.hpp"
#include "growthcodes/growth.hpp"

using namespace growthcodes;

namespace {

GrowthQuery query(Family f, std::uint64_t first, std::uint64_t last) {
  GrowthQuery q;
  q.family = f;
  q.first = first;
  q.last = last;
  return q;
}

}  // namespace

TEST_SUITE("growth") {

TEST_CASE("family tags") {
  for (const char* tag : {"seed-series", "seed-family", "rm-diagonal", "rm-third", "direct-sum", "repetition"}) {
    CHECK(family_tag(parse_family(tag)) == tag);
  }
  CHECK_THROWS_AS(parse_family("nope"), UnknownFamily);
}

TEST_CASE("seed-series table") {
  const auto rows = growth_table(query(Family::SeedSeries, 1, 3));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].kd_over_n == 2);
  CHECK(rows[1].kd_over_n == 4);
  CHECK(rows[2].kd_over_n == 6);
  CHECK(rows[0].verified);
  CHECK(rows[0].d == 6720);
  CHECK_FALSE(rows[1].verified);
  for (const auto& r : rows) {
    REQUIRE(r.series);
    CHECK(r.series->theorem_main);
    CHECK(r.kd_over_n == Rational(r.k * r.d, r.n));
  }
  CHECK(rows[1].series->j == 19);
  CHECK(rows[1].series->j_alternate == 11);
  CHECK(rows[1].series->alternate_kd_over_n == Rational(8, 3));
}

TEST_CASE("rm-diagonal table") {
  const auto rows = growth_table(query(Family::RmDiagonal, 1, 3));
  CHECK(rows[0].kd_over_n == 2);
  CHECK(rows[1].kd_over_n == 4);
  CHECK(rows[2].kd_over_n == 8);
  CHECK(rows[0].verified);
  CHECK(rows[1].verified);
  CHECK_FALSE(rows[2].verified);
}

TEST_CASE("repetition and direct sum keep kd/n constant") {
  for (Family f : {Family::Repetition, Family::DirectSum}) {
    const auto rows = growth_table(query(f, 1, 4));
    for (const auto& r : rows) {
      CHECK(r.kd_over_n == 1);
      CHECK(r.verified);
    }
  }
}

TEST_CASE("seed-family kd/n is linear in j") {
  for (std::uint64_t i = 2; i <= 4; ++i) {
    GrowthQuery q = query(Family::SeedFamily, 0, family_max_step(i).convert_to<std::uint64_t>());
    q.seed_i = i;
    q.options.verify = false;
    const auto rows = growth_table(q);
    for (const auto& r : rows) {
      // (k + j) d / n for the seed code [2i, 2i-1, 1].
      CHECK(r.kd_over_n == Rational(2 * i - 1 + r.index, 2 * i));
    }
  }
}

TEST_CASE("verified rows agree with formulas") {
  GrowthQuery q = query(Family::SeedFamily, 0, 5);
  q.seed_i = 2;
  for (const auto& r : growth_table(q)) {
    CHECK(r.verified);
    CHECK(r.d == predict_params(4, 3, 1, 3, r.index).d);
  }
}

TEST_CASE("theorem_main_check") {
  const auto rows = theorem_main_check(100);
  REQUIRE(rows.size() == 100);
  CHECK(rows[0].k == 8);
  CHECK(rows[2].k == 48);
  for (const auto& r : rows) CHECK(r.holds);
  CHECK_FALSE(theorem_main_holds(3, 49));
  CHECK_FALSE(theorem_main_holds(3, 36));
  CHECK_THROWS_AS(theorem_main_check(0), InvalidArgument);
}

TEST_CASE("csv and json layouts") {
  const auto rows = growth_table(query(Family::Repetition, 1, 2));
  std::ostringstream csv;
  write_growth_csv(csv, rows);
  CHECK(csv.str() ==
        "family,index,n,k,d,u,kd_over_n_num,kd_over_n_den,verified\n"
        "repetition,1,4,2,2,,1,1,true\n"
        "repetition,2,8,2,4,,1,1,true\n");

  const auto json = growth_json(rows);
  CHECK(json.dump() ==
        R"([{"family":"repetition","index":1,"n":"4","k":"2","d":"2","u":null,"kd_over_n_num":"1",)"
        R"("kd_over_n_den":"1","verified":true},{"family":"repetition","index":2,"n":"8","k":"2","d":"4",)"
        R"("u":null,"kd_over_n_num":"1","kd_over_n_den":"1","verified":true}])");
}

TEST_CASE("bad ranges") {
  CHECK_THROWS_AS(growth_table(query(Family::SeedSeries, 3, 2)), InvalidArgument);
  CHECK_THROWS_AS(growth_table(query(Family::RmThird, 0, 2)), InvalidArgument);
  GrowthQuery q = query(Family::SeedFamily, 0, 6);
  q.seed_i = 2;
  CHECK_THROWS_AS(growth_table(q), RangeViolation);
}

}
