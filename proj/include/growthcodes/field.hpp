#pragma once

#include <cstdint>
#include <iosfwd>

namespace growthcodes {

// Canonical residue in {0, ..., p-1}.
using Residue = std::uint32_t;

class FieldElement;

// Arithmetic context for GF(p). Immutable; copying is free.
//
// p is limited to 31 bits so that sums of two residues fit in a Residue and
// products fit in 64 bits.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

  // Throws CompositeModulus unless p is prime, InvalidArgument if p exceeds
  // kMaxModulus.
  explicit PrimeField(std::uint64_t p);

  Residue modulus() const noexcept { return p_; }

  Residue add(Residue a, Residue b) const noexcept {
    const Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : p_ - (b - a); }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  // Throws DivisionByZero for a == 0.
  Residue inv(Residue a) const;

  // Reduces any signed integer into canonical form (-1 maps to p-1).
  Residue reduce(std::int64_t v) const noexcept;

  FieldElement element(std::int64_t v) const;
  FieldElement zero() const;
  FieldElement one() const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  Residue p_;
};

PrimeField make_field(std::uint64_t p);

bool is_prime(std::uint64_t p) noexcept;

class FieldElement {
 public:
  FieldElement(const PrimeField& field, Residue value);

  Residue value() const noexcept { return value_; }
  const PrimeField& field() const noexcept { return field_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);

  // Field-aware equality: elements of different fields compare unequal.
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  PrimeField field_;
  Residue value_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace growthcodes
