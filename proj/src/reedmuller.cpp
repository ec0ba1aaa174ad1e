#include "growthcodes/reedmuller.hpp"

#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "growthcodes/errors.hpp"

namespace growthcodes {

namespace {

void require_order(std::uint64_t m, std::uint64_t r) {
  if (r > m) throw InvalidArgument("RM order r = " + std::to_string(r) + " exceeds m = " + std::to_string(m));
}

// Next r-subset of {0..m-1} in lexicographic order; false after the last one.
bool next_subset(std::vector<std::size_t>& s, std::size_t m) {
  const std::size_t r = s.size();
  for (std::size_t pos = r; pos-- > 0;) {
    if (s[pos] < m - r + pos) {
      ++s[pos];
      for (std::size_t q = pos + 1; q < r; ++q) s[q] = s[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

RMParams rm_params(std::uint64_t m, std::uint64_t r) {
  require_order(m, r);
  RMParams p;
  p.m = m;
  p.r = r;
  p.params.n = ipow(2, m);
  p.params.k = binomial_prefix_sum(m, r);
  p.params.d = ipow(2, m - r);
  p.kd_over_n = kd_over_n(p.params);
  return p;
}

LinearCode rm_generator(std::uint64_t m, std::uint64_t r, const MaterializationOptions& budget) {
  require_order(m, r);
  if (m >= 63 || (std::uint64_t{1} << m) > budget.max_coordinates) {
    throw BudgetExceeded("RM(" + std::to_string(m) + "," + std::to_string(r) + ") generator",
                         ipow(2, m).str(), std::to_string(budget.max_coordinates));
  }
  const PrimeField gf2(2);
  const std::size_t n = std::size_t{1} << m;
  std::vector<FieldVector> rows;
  for (std::size_t deg = 0; deg <= r; ++deg) {
    std::vector<std::size_t> subset(deg);
    for (std::size_t t = 0; t < deg; ++t) subset[t] = t;
    do {
      std::size_t mask = 0;
      for (std::size_t t : subset) mask |= std::size_t{1} << t;
      std::vector<Residue> row(n);
      for (std::size_t x = 0; x < n; ++x) row[x] = (x & mask) == mask ? 1 : 0;
      rows.emplace_back(gf2, std::move(row));
    } while (deg > 0 && next_subset(subset, m));
  }
  return LinearCode(gf2, rows);
}

RMThirdRecord rm_third_series(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("rm-third index m must be at least 1");
  using Real = boost::multiprecision::mpfr_float_50;
  RMThirdRecord rec;
  rec.rm = rm_params(m, std::min<std::uint64_t>(m / 3 + 1, m));
  const Real pi = boost::math::constants::pi<Real>();
  const Real asymptote = 3 / sqrt(pi * m) * pow(Real(3) / 2, m);
  const Real value(rec.rm.kd_over_n);
  rec.asymptote_ratio = static_cast<double>(value / asymptote);
  return rec;
}

RMParams rm_diagonal(std::uint64_t r) { return rm_params(2 * r + 1, r); }

}  // namespace growthcodes
