#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "growthcodes/bigint.hpp"
#include "growthcodes/field.hpp"
#include "growthcodes/linalg.hpp"

namespace growthcodes {

// Exhaustive search settings.
struct SearchOptions {
  static constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

  // Upper limit on q^k, the size of the message space.
  std::uint64_t budget = kDefaultBudget;
  // 0 selects std::thread::hardware_concurrency().
  unsigned workers = 1;

  // Defaults, with GROWTHCODES_BUDGET overriding the budget when set.
  // Throws InvalidArgument on a malformed value.
  static SearchOptions from_environment();
};

// A linear code given by an ordered basis (the rows of `generator()`).
//
// The minimum distance is only ever stored after an exhaustive search has
// produced it; predicted distances live in CodeParams.
class LinearCode {
 public:
  // Throws LengthMismatch, FieldMismatch, InvalidArgument (empty basis) or
  // DependentBasis.
  LinearCode(const PrimeField& field, std::span<const FieldVector> basis);
  explicit LinearCode(FieldMatrix generator);

  const PrimeField& field() const noexcept { return generator_.field(); }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  const FieldMatrix& generator() const noexcept { return generator_; }
  FieldVector basis_vector(std::size_t j) const { return generator_.row_vector(j); }
  std::vector<std::size_t> basis_weights() const;

  const std::optional<std::uint64_t>& verified_distance() const noexcept { return distance_; }

  friend bool operator==(const LinearCode& a, const LinearCode& b) noexcept {
    return a.generator_ == b.generator_;
  }

 private:
  friend std::uint64_t min_distance_exhaustive(LinearCode& code, const SearchOptions& options);
  void record_distance(std::uint64_t d);

  FieldMatrix generator_;
  std::optional<std::uint64_t> distance_;
};

// Parameter triple at symbolic scale, for codes too large to materialize.
struct CodeParams {
  BigInt n;
  BigInt k;
  BigInt d;
  std::optional<BigInt> u;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

// q^k as an exact integer.
BigInt message_space_size(const LinearCode& code);

// Minimum nonzero codeword weight over the whole message space, without
// touching the cache. Throws BudgetExceeded when q^k > options.budget.
//
// GF(2) walks a Gray code over bit-packed codewords; other fields walk a
// mixed-radix odometer restricted to messages whose leading nonzero digit is
// 1 (scalar multiples share a weight). The message space is split into
// contiguous ranges, one per worker; the result does not depend on the split.
std::uint64_t search_min_distance(const LinearCode& code, const SearchOptions& options = {});

// As above, and caches the verified result on the code.
std::uint64_t min_distance_exhaustive(LinearCode& code, const SearchOptions& options = {});

Rational rate(const LinearCode& code);
Rational rate(const CodeParams& params);
Rational kd_over_n(const CodeParams& params);

// d <= n - k + 1.
bool singleton_check(const CodeParams& params);

// Block-diagonal sum of s copies: [ns, ks, d].
LinearCode direct_sum(const LinearCode& code, std::size_t s);
// Each basis vector concatenated s times: [ns, k, ds].
LinearCode repetition(const LinearCode& code, std::size_t s);

}  // namespace growthcodes
