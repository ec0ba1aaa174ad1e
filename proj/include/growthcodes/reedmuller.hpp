#pragma once

#include <cstdint>
#include <optional>

#include "growthcodes/bigint.hpp"
#include "growthcodes/code.hpp"
#include "growthcodes/construct.hpp"

namespace growthcodes {

// Exact parameters of RM(m, r): [2^m, sum_{j<=r} C(m, j), 2^(m-r)].
struct RMParams {
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  CodeParams params;
  Rational kd_over_n;
};

// Throws InvalidArgument unless 0 <= r <= m.
RMParams rm_params(std::uint64_t m, std::uint64_t r);

// Generator of RM(m, r) over GF(2). Rows are monomial evaluation vectors,
// ordered by degree and then lexicographically by variable subset. Coordinate
// x in 0..2^m-1 is the point whose variable t is bit t of x.
// Throws BudgetExceeded when 2^m exceeds the materialization budget.
LinearCode rm_generator(std::uint64_t m, std::uint64_t r, const MaterializationOptions& budget = {});

// RM(m, floor(m/3) + 1) (order clamped to m), with the ratio of its kd/n to
// (3 / sqrt(pi m)) (3/2)^m evaluated at 50 digits and rounded to double.
struct RMThirdRecord {
  RMParams rm;
  double asymptote_ratio = 0.0;
};

RMThirdRecord rm_third_series(std::uint64_t m);

// RM(2r+1, r): k = 2^(2r) and kd/n = sqrt(k).
RMParams rm_diagonal(std::uint64_t r);

}  // namespace growthcodes
