#pragma once

#include <cstdint>
#include <optional>

#include "growthcodes/bigint.hpp"
#include "growthcodes/code.hpp"
#include "growthcodes/construct.hpp"
#include "growthcodes/linalg.hpp"

namespace growthcodes {

// The seed matrices for index i: A is 2i x 2i with entries in {0, 1, -1},
// B is the 2 x 2i sign pattern with B(a, b) = (-1)^(a+b).
//
//   A_1 = [0 -1; 1 0],  B_1 = [1 -1; -1 1]
//   A_{i+1} = [A_1 B_i; -B_i^T A_i],  B_{i+1} = [B_1 B_i]
struct SeedMatrices {
  std::uint64_t i = 0;
  FieldMatrix A;
  FieldMatrix B;
};

struct SeedOptions {
  // Cap on the number of entries of A.
  std::uint64_t max_matrix_entries = std::uint64_t{1} << 24;
};

// Throws InvalidArgument for i == 0 and BudgetExceeded past the entry cap.
SeedMatrices build_seed_matrices(const PrimeField& field, std::uint64_t i, const SeedOptions& options = {});

// Largest j for which the seed family member is still bounded: 4i^2 - 6i + 1.
// Only meaningful for i >= 2.
BigInt family_max_step(std::uint64_t i);

// The [2i, 2i-1, 1] code spanned by the first 2i-1 columns of A_i, in column
// order. The distance is verified exhaustively when q^(2i-1) fits the search
// budget. i == 1 is allowed; that code fails the boundedness inequality.
LinearCode seed_code(const PrimeField& field, std::uint64_t i, const SearchOptions& search = {},
                     const SeedOptions& options = {});

// Formula parameters of the seed code itself: (2i, 2i-1, 1, u = 2i-1).
CodeParams seed_params(std::uint64_t i);

struct FamilyMember {
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  ChainParams params;
  // Present when the length fits the materialization budget.
  std::optional<LinearCode> code;

  bool materialized() const noexcept { return code.has_value(); }
  bool verified() const noexcept { return code && code->verified_distance().has_value(); }
};

struct FamilyOptions {
  MaterializationOptions materialize;
  SearchOptions search;
  // Run the exhaustive search on materialized members within the budget.
  bool verify = true;
};

// The seed code for i after j construction steps. Requires i >= 2 and
// 0 <= j <= 4i^2 - 6i + 1; otherwise throws RangeViolation (predict_params
// still evaluates the formulas, without the boundedness guarantee).
FamilyMember family_code(const PrimeField& field, std::uint64_t i, std::uint64_t j,
                         const FamilyOptions& options = {});

// Member i >= 1 of the headline series: the seed family for i+1 taken to its
// largest bounded step.
//
// Two step counts are reported. `j` = 4i^2 + 2i - 1 is the one used for the
// parameters; it is the largest bounded step of the (i+1) family and gives
// K = 4i(i+1) and KD/N = 2i. `j_alternate` = 4i^2 - 2i - 1 is the other
// candidate; with it K = 4i^2 and KD/N = 2i^2/(i+1).
struct SeriesMember {
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  std::uint64_t j_alternate = 0;
  ChainParams params;
  Rational kd_over_n;
  ChainParams alternate_params;
  Rational alternate_kd_over_n;
  std::optional<LinearCode> code;

  bool verified() const noexcept { return code && code->verified_distance().has_value(); }
};

SeriesMember series_code(const PrimeField& field, std::uint64_t i, const FamilyOptions& options = {});

// Parameter-only variant; never materializes.
SeriesMember series_params(std::uint64_t i);

}  // namespace growthcodes
