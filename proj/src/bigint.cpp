#include "growthcodes/bigint.hpp"

#include <limits>

#include "growthcodes/errors.hpp"

namespace growthcodes {

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (std::uint64_t j = 0; j < k; ++j) {
    c *= n - j;
    c /= j + 1;
  }
  return c;
}

namespace {

// prod_{l=lo..hi} (offset + l)
BigInt product_range(const BigInt& offset, std::uint64_t lo, std::uint64_t hi) {
  if (hi - lo < 16) {
    BigInt p = offset + lo;
    for (std::uint64_t l = lo + 1; l <= hi; ++l) p *= offset + l;
    return p;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  return product_range(offset, lo, mid) * product_range(offset, mid + 1, hi);
}

}  // namespace

BigInt binomial_prefix_sum(std::uint64_t n, std::uint64_t r) {
  if (r > n) r = n;
  BigInt term = 1;
  BigInt sum = 1;
  for (std::uint64_t j = 0; j < r; ++j) {
    term *= n - j;
    term /= j + 1;
    sum += term;
  }
  return sum;
}

BigInt rising_product(const BigInt& offset, std::uint64_t count) {
  if (count == 0) return 1;
  return product_range(offset, 1, count);
}

std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw InvalidArgument(std::string(what) + " does not fit in 64 bits: " + v.str());
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace growthcodes
