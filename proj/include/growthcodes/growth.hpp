#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "growthcodes/bigint.hpp"
#include "growthcodes/code.hpp"
#include "growthcodes/seeds.hpp"

namespace growthcodes {

enum class Family { SeedSeries, SeedFamily, RmDiagonal, RmThird, DirectSum, Repetition };

// Tags: seed-series, seed-family, rm-diagonal, rm-third, direct-sum,
// repetition. Throws UnknownFamily.
Family parse_family(std::string_view tag);
std::string_view family_tag(Family f) noexcept;

struct SeriesColumns {
  std::uint64_t j = 0;
  std::uint64_t j_alternate = 0;
  Rational alternate_kd_over_n;
  bool theorem_main = false;
};

struct RMColumns {
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  std::optional<double> asymptote_ratio;
};

// One row of a growth table. `verified` is true only when d came out of the
// exhaustive search.
struct GrowthRecord {
  Family family = Family::SeedSeries;
  std::uint64_t index = 0;
  BigInt n;
  BigInt k;
  BigInt d;
  std::optional<BigInt> u;
  Rational kd_over_n;
  bool verified = false;

  std::optional<std::uint64_t> seed_i;
  std::optional<SeriesColumns> series;
  std::optional<RMColumns> rm;
};

struct GrowthQuery {
  Family family = Family::SeedSeries;
  std::uint64_t first = 1;
  std::uint64_t last = 1;
  // seed-family: which seed index; rows are indexed by the step count j.
  std::uint64_t seed_i = 2;
  // direct-sum / repetition: base code, rows indexed by s. Defaults to the
  // [4, 2, 2] binary code spanned by (1,1,0,0) and (0,0,1,1).
  std::optional<LinearCode> base;
  // Field used when members are materialized for verification.
  std::uint64_t field = 2;
  FamilyOptions options;
};

LinearCode default_base_code();

// One record per index in [first, last], in index order. Throws
// InvalidArgument for an empty or illegal range and RangeViolation for
// seed-family steps outside the bounded range.
std::vector<GrowthRecord> growth_table(const GrowthQuery& query);

struct TheoremMainRow {
  std::uint64_t i = 0;
  BigInt k;
  bool holds = false;
};

// (2i+1)^2 > K_i > (2i)^2 for the series dimension K_i, which is the squared
// form of 2i > sqrt(K_i) - 1 > 2i - 1.
std::vector<TheoremMainRow> theorem_main_check(std::uint64_t i_max);
bool theorem_main_holds(std::uint64_t i, const BigInt& k);

// Columns: family,index,n,k,d,u,kd_over_n_num,kd_over_n_den,verified and
// then the family's extra columns. Big integers are written in decimal.
void write_growth_csv(std::ostream& out, const std::vector<GrowthRecord>& rows);
// Array of objects with the same keys in the same order; integers that may
// exceed 64 bits are decimal strings.
nlohmann::ordered_json growth_json(const std::vector<GrowthRecord>& rows);

}  // namespace growthcodes
