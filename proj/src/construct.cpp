#include "growthcodes/construct.hpp"

#include <algorithm>
#include <string>

#include "growthcodes/errors.hpp"

namespace growthcodes {

namespace {

void require_positive(const BigInt& v, const char* name) {
  if (v <= 0) throw InvalidArgument(std::string(name) + " must be positive, got " + v.str());
}

// u >= d (1 + steps/k), compared as u k >= d (k + steps).
bool meets_threshold(const BigInt& u, const BigInt& d, const BigInt& k, std::uint64_t steps) {
  return u * k >= d * (k + steps);
}

}  // namespace

BoundednessReport check_bounded(LinearCode& code, std::uint64_t u, const SearchOptions& search) {
  if (u == 0) throw InvalidArgument("u must be positive");
  BoundednessReport report;
  report.u = u;
  report.d_used = min_distance_exhaustive(code, search);
  report.basis_weights = code.basis_weights();
  report.cond_weights_ok = std::all_of(report.basis_weights.begin(), report.basis_weights.end(),
                                       [u](std::size_t w) { return w == u; });

  FieldVector sum(code.field(), code.length());
  for (std::size_t j = 0; j < code.dimension(); ++j) sum += code.basis_vector(j);
  report.sum_weight = weight(sum);
  report.cond_sum_ok = report.sum_weight == report.d_used;
  report.cond_inequality_ok =
      meets_threshold(BigInt(u), BigInt(report.d_used), BigInt(code.dimension()), 1);
  return report;
}

FieldMatrix construction_step(const FieldMatrix& basis) {
  const std::size_t k = basis.rows();
  const std::size_t n = basis.cols();
  const std::size_t blocks = k + 1;
  FieldMatrix out(basis.field(), blocks, n * blocks);
  for (std::size_t t = 0; t < blocks; ++t) {
    for (std::size_t r = 0; r < blocks; ++r) {
      const std::size_t src = (r + blocks - t + blocks - 1) % blocks;
      if (src == k) continue;
      const auto row = basis.row(src);
      std::copy(row.begin(), row.end(), &out(t, r * n));
    }
  }
  return out;
}

LinearCode construction_step(const LinearCode& code) {
  try {
    return LinearCode(construction_step(code.generator()));
  } catch (const DependentBasis& e) {
    throw DependentBasis(std::string("construction step produced a dependent basis: ") + e.what());
  }
}

BigInt iterated_length(const BigInt& n, const BigInt& k, std::uint64_t steps) {
  return n * rising_product(k, steps);
}

LinearCode iterate(const LinearCode& code, std::uint64_t steps, const MaterializationOptions& budget) {
  const BigInt length = iterated_length(code.length(), code.dimension(), steps);
  if (length > budget.max_coordinates) {
    throw BudgetExceeded("materializing " + std::to_string(steps) + " construction steps", length.str(),
                         std::to_string(budget.max_coordinates));
  }
  FieldMatrix g = code.generator();
  for (std::uint64_t s = 0; s < steps; ++s) g = construction_step(g);
  try {
    return LinearCode(std::move(g));
  } catch (const DependentBasis& e) {
    throw DependentBasis(std::string("iterated construction produced a dependent basis: ") + e.what());
  }
}

ChainParams predict_params(const BigInt& n, const BigInt& k, const BigInt& d, const BigInt& u, std::uint64_t j) {
  require_positive(n, "n");
  require_positive(k, "k");
  require_positive(d, "d");
  require_positive(u, "u");
  ChainParams out;
  out.j = j;
  out.n = iterated_length(n, k, j);
  out.k = k + j;
  out.u = u * rising_product(k - 1, j);
  out.input_inequality_ok = meets_threshold(u, d, k, 1);
  out.d_exact = j == 0 || meets_threshold(u, d, k, j);
  out.d = out.d_exact ? d * rising_product(k, j) : chain_distance_lower_bound(k, d, j);
  out.bounded_after = meets_threshold(u, d, k, j + 1);
  return out;
}

BigInt chain_distance_lower_bound(const BigInt& k, const BigInt& d, std::uint64_t j) {
  return d * rising_product(k - 1, j);
}

BigInt max_exact_steps(const BigInt& k, const BigInt& d, const BigInt& u) {
  require_positive(k, "k");
  require_positive(d, "d");
  require_positive(u, "u");
  if (!meets_threshold(u, d, k, 1)) {
    throw NotBounded("u = " + u.str() + " < d (1 + 1/k) for k = " + k.str() + ", d = " + d.str());
  }
  // floor(k (u - d) / d); the numerator is nonnegative here.
  return k * (u - d) / d;
}

}  // namespace growthcodes
