#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "growthcodes/bigint.hpp"
#include "growthcodes/code.hpp"
#include "growthcodes/linalg.hpp"

namespace growthcodes {

// Outcome of testing an ordered basis for u-boundedness:
//   (i)   every basis vector has weight u,
//   (ii)  the sum of all basis vectors has weight d,
//   (iii) u >= d (1 + 1/k).
struct BoundednessReport {
  std::uint64_t u = 0;
  bool cond_weights_ok = false;
  bool cond_sum_ok = false;
  bool cond_inequality_ok = false;
  // Always an exhaustively verified distance.
  std::uint64_t d_used = 0;
  std::size_t sum_weight = 0;
  std::vector<std::size_t> basis_weights;

  bool bounded() const noexcept { return cond_weights_ok && cond_sum_ok && cond_inequality_ok; }
};

// Runs the exhaustive search first if the code has no verified distance.
// BudgetExceeded propagates from the search.
BoundednessReport check_bounded(LinearCode& code, std::uint64_t u, const SearchOptions& search = {});

// One cyclic-stacking step. Row t (0-based) of the result is the k+1 blocks
// of length n whose block r holds basis row (r - t - 1) mod (k+1), with the
// value k standing for the zero block. So the first output row starts with
// the zero block and the last output row ends with it.
FieldMatrix construction_step(const FieldMatrix& basis);
// Same step; the output is re-validated as a basis and DependentBasis here
// means a bug.
LinearCode construction_step(const LinearCode& code);

struct MaterializationOptions {
  static constexpr std::uint64_t kDefaultMaxCoordinates = 1'000'000;
  // Longest basis vector any materializing routine may produce.
  std::uint64_t max_coordinates = kDefaultMaxCoordinates;
};

// Length after `steps` construction steps: n * prod_{l=1..steps} (k + l).
BigInt iterated_length(const BigInt& n, const BigInt& k, std::uint64_t steps);

// `steps` applications of construction_step; steps == 0 returns the input
// basis (without its cached distance). Throws BudgetExceeded when the final
// length would exceed the materialization budget.
LinearCode iterate(const LinearCode& code, std::uint64_t steps, const MaterializationOptions& budget = {});

// Predicted parameters after j steps from an [n, k, d] code with basis weight u.
struct ChainParams {
  std::uint64_t j = 0;
  BigInt n;
  BigInt k;
  BigInt d;
  BigInt u;
  // d is exact when u >= d (1 + j/k); otherwise it is the lower bound
  // d prod (k + l - 1).
  bool d_exact = false;
  // The j-step code is u_j-bounded iff u >= d (1 + (j+1)/k).
  bool bounded_after = false;
  // Whether the input itself satisfies u >= d (1 + 1/k).
  bool input_inequality_ok = false;

  CodeParams params() const { return {n, k, d, u}; }
};

// Exact prediction for a u-bounded input. The caller vouches for conditions
// (i) and (ii); condition (iii) is re-checked into input_inequality_ok.
ChainParams predict_params(const BigInt& n, const BigInt& k, const BigInt& d, const BigInt& u, std::uint64_t j);

// Lower bound d prod_{l=1..j} (k + l - 1) valid for any input code.
BigInt chain_distance_lower_bound(const BigInt& k, const BigInt& d, std::uint64_t j);

// floor(k (u/d - 1)): the largest j whose predicted distance is exact.
// Throws NotBounded unless u >= d (1 + 1/k).
BigInt max_exact_steps(const BigInt& k, const BigInt& d, const BigInt& u);

}  // namespace growthcodes
