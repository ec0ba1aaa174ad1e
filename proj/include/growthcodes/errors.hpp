#pragma once

#include <stdexcept>
#include <string>

namespace growthcodes {

// Base of every error the library raises. `kind()` is a stable tag the CLI
// and the Python bindings surface verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define GROWTHCODES_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(#Name, what) {}     \
  }

GROWTHCODES_DEFINE_ERROR(CompositeModulus);
GROWTHCODES_DEFINE_ERROR(DivisionByZero);
GROWTHCODES_DEFINE_ERROR(FieldMismatch);
GROWTHCODES_DEFINE_ERROR(LengthMismatch);
GROWTHCODES_DEFINE_ERROR(NotSquare);
GROWTHCODES_DEFINE_ERROR(ShapeMismatch);
GROWTHCODES_DEFINE_ERROR(DependentBasis);
GROWTHCODES_DEFINE_ERROR(NotBounded);
GROWTHCODES_DEFINE_ERROR(RangeViolation);
GROWTHCODES_DEFINE_ERROR(UnknownFamily);
GROWTHCODES_DEFINE_ERROR(ParseError);
GROWTHCODES_DEFINE_ERROR(IoError);
GROWTHCODES_DEFINE_ERROR(InvalidArgument);

#undef GROWTHCODES_DEFINE_ERROR

// Raised when a search or materialization would exceed its budget. The
// required amount is kept as a decimal string because it routinely
// overflows 64 bits (q^k for large k, lengths of deep iterations).
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::string required, std::string budget)
      : Error("BudgetExceeded", what + " (required " + required + ", budget " + budget + ")"),
        required_(std::move(required)),
        budget_(std::move(budget)) {}

  const std::string& required() const noexcept { return required_; }
  const std::string& budget() const noexcept { return budget_; }

 private:
  std::string required_;
  std::string budget_;
};

}  // namespace growthcodes
