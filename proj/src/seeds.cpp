#include "growthcodes/seeds.hpp"

#include <string>
#include <vector>

#include "growthcodes/errors.hpp"

namespace growthcodes {

namespace {

// Unrolling A_{i+1} = [A_1 B_i; -B_i^T A_i] with B_i = [B_1 ... B_1] gives a
// 2x2 block grid: A_1 on the diagonal, B_1 above it and -B_1^T = -B_1 below.
FieldMatrix seed_A(const PrimeField& f, std::uint64_t i) {
  const std::size_t m = 2 * i;
  const Residue one = 1;
  const Residue minus_one = f.neg(1);
  FieldMatrix a(f, m, m);
  for (std::size_t br = 0; br < i; ++br) {
    for (std::size_t bc = 0; bc < i; ++bc) {
      const std::size_t r = 2 * br, c = 2 * bc;
      if (br == bc) {
        a(r, c + 1) = minus_one;
        a(r + 1, c) = one;
      } else {
        const bool upper = br < bc;
        a(r, c) = a(r + 1, c + 1) = upper ? one : minus_one;
        a(r, c + 1) = a(r + 1, c) = upper ? minus_one : one;
      }
    }
  }
  return a;
}

FieldMatrix seed_B(const PrimeField& f, std::uint64_t i) {
  FieldMatrix b(f, 2, 2 * i);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t c = 0; c < 2 * i; ++c) b(a, c) = (a + c) % 2 == 0 ? 1 : f.neg(1);
  return b;
}

LinearCode seed_basis(const PrimeField& field, std::uint64_t i, const SeedOptions& options) {
  const SeedMatrices s = build_seed_matrices(field, i, options);
  std::vector<FieldVector> basis;
  basis.reserve(2 * i - 1);
  for (std::size_t c = 0; c + 1 < 2 * i; ++c) basis.push_back(s.A.column(c));
  return LinearCode(field, basis);
}

void require_family_range(std::uint64_t i, std::uint64_t j) {
  if (i < 2) throw RangeViolation("seed families start at i = 2, got i = " + std::to_string(i));
  const BigInt jmax = family_max_step(i);
  if (j > jmax) {
    throw RangeViolation("j = " + std::to_string(j) + " exceeds the bounded range 0.." + jmax.str() +
                         " for i = " + std::to_string(i));
  }
}

ChainParams family_params(std::uint64_t i, std::uint64_t j) {
  const CodeParams s = seed_params(i);
  return predict_params(s.n, s.k, s.d, *s.u, j);
}

Rational kd_ratio(const ChainParams& p) { return Rational(p.k * p.d, p.n); }

}  // namespace

SeedMatrices build_seed_matrices(const PrimeField& field, std::uint64_t i, const SeedOptions& options) {
  if (i == 0) throw InvalidArgument("seed index i must be at least 1");
  const BigInt entries = BigInt(2 * i) * (2 * i);
  if (i > (std::uint64_t{1} << 31) || entries > options.max_matrix_entries) {
    throw BudgetExceeded("seed matrix for i = " + std::to_string(i), entries.str(),
                         std::to_string(options.max_matrix_entries));
  }
  return {i, seed_A(field, i), seed_B(field, i)};
}

BigInt family_max_step(std::uint64_t i) {
  const BigInt bi = i;
  return 4 * bi * bi - 6 * bi + 1;
}

LinearCode seed_code(const PrimeField& field, std::uint64_t i, const SearchOptions& search,
                     const SeedOptions& options) {
  LinearCode code = seed_basis(field, i, options);
  if (message_space_size(code) <= search.budget) min_distance_exhaustive(code, search);
  return code;
}

CodeParams seed_params(std::uint64_t i) {
  if (i == 0) throw InvalidArgument("seed index i must be at least 1");
  return {BigInt(2 * i), BigInt(2 * i - 1), BigInt(1), BigInt(2 * i - 1)};
}

FamilyMember family_code(const PrimeField& field, std::uint64_t i, std::uint64_t j,
                         const FamilyOptions& options) {
  require_family_range(i, j);
  FamilyMember member;
  member.i = i;
  member.j = j;
  member.params = family_params(i, j);
  if (member.params.n <= options.materialize.max_coordinates) {
    member.code = iterate(seed_basis(field, i, {}), j, options.materialize);
    if (options.verify && message_space_size(*member.code) <= options.search.budget) {
      min_distance_exhaustive(*member.code, options.search);
    }
  }
  return member;
}

SeriesMember series_params(std::uint64_t i) {
  if (i == 0) throw InvalidArgument("series index i must be at least 1");
  SeriesMember s;
  s.i = i;
  s.j = static_cast<std::uint64_t>(family_max_step(i + 1));
  s.j_alternate = 4 * i * i - 2 * i - 1;
  s.params = family_params(i + 1, s.j);
  s.kd_over_n = kd_ratio(s.params);
  s.alternate_params = family_params(i + 1, s.j_alternate);
  s.alternate_kd_over_n = kd_ratio(s.alternate_params);
  return s;
}

SeriesMember series_code(const PrimeField& field, std::uint64_t i, const FamilyOptions& options) {
  SeriesMember s = series_params(i);
  if (s.params.n <= options.materialize.max_coordinates) {
    s.code = family_code(field, i + 1, s.j, options).code;
  }
  return s;
}

}  // namespace growthcodes
