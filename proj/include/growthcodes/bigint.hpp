#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace growthcodes {

// GMP-backed; the series parameters run to hundreds of thousands of digits.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

// "num/den" in lowest terms, or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

BigInt ipow(const BigInt& base, std::uint64_t exp);

// Exact binomial coefficient C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

// sum_{j=0..r} C(n, j), with r clamped to n.
BigInt binomial_prefix_sum(std::uint64_t n, std::uint64_t r);

// Product of (offset + l) for l = 1..count, by binary splitting. Empty
// product is 1.
BigInt rising_product(const BigInt& offset, std::uint64_t count);

// Converts with a range check; throws InvalidArgument when v does not fit.
std::uint64_t to_u64(const BigInt& v, const char* what);

}  // namespace growthcodes
