#include "growthcodes/code.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "growthcodes/errors.hpp"

namespace growthcodes {

namespace {

FieldMatrix validated(FieldMatrix g) {
  if (g.rows() == 0) throw InvalidArgument("a code needs a nonempty basis");
  if (g.cols() == 0) throw LengthMismatch("basis vectors have length 0");
  const std::size_t r = rank(g);
  if (r < g.rows()) {
    throw DependentBasis("basis of " + std::to_string(g.rows()) + " vectors has rank " + std::to_string(r));
  }
  return g;
}

}  // namespace

LinearCode::LinearCode(const PrimeField& field, std::span<const FieldVector> basis)
    : generator_(validated(FieldMatrix::from_rows(field, basis))) {}

LinearCode::LinearCode(FieldMatrix generator) : generator_(validated(std::move(generator))) {}

std::vector<std::size_t> LinearCode::basis_weights() const {
  std::vector<std::size_t> w(dimension());
  for (std::size_t j = 0; j < dimension(); ++j) w[j] = weight(generator_.row(j));
  return w;
}

void LinearCode::record_distance(std::uint64_t d) {
  const auto weights = basis_weights();
  const std::uint64_t min_basis = *std::min_element(weights.begin(), weights.end());
  if (d < 1 || d > length() - dimension() + 1 || d > min_basis) {
    throw std::logic_error("search produced distance " + std::to_string(d) +
                           " violating the Singleton or basis-weight bound");
  }
  distance_ = d;
}

Rational rate(const LinearCode& code) { return Rational(code.dimension(), code.length()); }

Rational rate(const CodeParams& params) { return Rational(params.k, params.n); }

Rational kd_over_n(const CodeParams& params) { return Rational(params.k * params.d, params.n); }

bool singleton_check(const CodeParams& params) { return params.d <= params.n - params.k + 1; }

LinearCode direct_sum(const LinearCode& code, std::size_t s) {
  if (s == 0) throw InvalidArgument("direct sum needs s >= 1");
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  FieldMatrix g(code.field(), k * s, n * s);
  for (std::size_t copy = 0; copy < s; ++copy)
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c) g(copy * k + r, copy * n + c) = code.generator()(r, c);
  return LinearCode(std::move(g));
}

LinearCode repetition(const LinearCode& code, std::size_t s) {
  if (s == 0) throw InvalidArgument("repetition needs s >= 1");
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  FieldMatrix g(code.field(), k, n * s);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t copy = 0; copy < s; ++copy)
      for (std::size_t c = 0; c < n; ++c) g(r, copy * n + c) = code.generator()(r, c);
  return LinearCode(std::move(g));
}

}  // namespace growthcodes
