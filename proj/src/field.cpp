#include "growthcodes/field.hpp"

#include <ostream>
#include <string>

#include "growthcodes/errors.hpp"

namespace growthcodes {

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0 || p % 3 == 0) return false;
  for (std::uint64_t f = 5; f * f <= p; f += 6) {
    if (p % f == 0 || p % (f + 2) == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
  if (p > kMaxModulus) {
    throw InvalidArgument("modulus " + std::to_string(p) + " exceeds 2^31 - 1");
  }
  if (!is_prime(p)) throw CompositeModulus(std::to_string(p) + " is not prime");
  p_ = static_cast<Residue>(p);
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(p_) + ")");
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return reduce(t0);
}

Residue PrimeField::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

FieldElement PrimeField::element(std::int64_t v) const { return {*this, reduce(v)}; }
FieldElement PrimeField::zero() const { return {*this, 0}; }
FieldElement PrimeField::one() const { return {*this, 1}; }

PrimeField make_field(std::uint64_t p) { return PrimeField(p); }

FieldElement::FieldElement(const PrimeField& field, Residue value) : field_(field), value_(value) {
  if (value >= field.modulus()) {
    throw InvalidArgument("residue " + std::to_string(value) + " is not canonical mod " +
                          std::to_string(field.modulus()));
  }
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch("GF(" + std::to_string(a.field().modulus()) + ") vs GF(" +
                        std::to_string(b.field().modulus()) + ")");
  }
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_.add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_.sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_.mul(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_.neg(a.value_)}; }

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement neg(const FieldElement& a) { return -a; }
FieldElement inv(const FieldElement& a) { return {a.field(), a.field().inv(a.value())}; }

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.value() << " (mod " << e.field().modulus() << ")";
}

}  // namespace growthcodes
