#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "growthcodes/field.hpp"

namespace growthcodes {

// A vector in GF(p)^n stored as canonical residues.
class FieldVector {
 public:
  FieldVector(const PrimeField& field, std::size_t length);
  FieldVector(const PrimeField& field, std::vector<Residue> entries);
  // Signed entries are reduced mod p, so {0, 1, -1} reads naturally.
  static FieldVector from_ints(const PrimeField& field, std::initializer_list<std::int64_t> values);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  Residue operator[](std::size_t i) const noexcept { return entries_[i]; }
  FieldElement at(std::size_t i) const;
  void set(std::size_t i, Residue v);

  std::span<const Residue> entries() const noexcept { return entries_; }

  FieldVector& operator+=(const FieldVector& other);
  FieldVector& operator-=(const FieldVector& other);
  friend FieldVector operator+(FieldVector a, const FieldVector& b) { return a += b; }
  friend FieldVector operator-(FieldVector a, const FieldVector& b) { return a -= b; }
  FieldVector scaled(Residue c) const;

  friend bool operator==(const FieldVector& a, const FieldVector& b) noexcept {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  PrimeField field_;
  std::vector<Residue> entries_;
};

// Number of nonzero coordinates.
std::size_t weight(const FieldVector& v) noexcept;
std::size_t weight(std::span<const Residue> v) noexcept;

// weight(x - y). Throws LengthMismatch or FieldMismatch.
std::size_t hamming_distance(const FieldVector& x, const FieldVector& y);

// Dense row-major matrix over GF(p). Zero rows or zero columns are valid.
class FieldMatrix {
 public:
  FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols);
  FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols, std::vector<Residue> data);

  static FieldMatrix identity(const PrimeField& field, std::size_t m);
  static FieldMatrix zero(const PrimeField& field, std::size_t rows, std::size_t cols);
  static FieldMatrix from_ints(const PrimeField& field,
                               std::initializer_list<std::initializer_list<std::int64_t>> rows);
  // All vectors must share one field and length. An empty list gives a 0x0 matrix.
  static FieldMatrix from_rows(const PrimeField& field, std::span<const FieldVector> rows);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  std::span<const Residue> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  FieldVector row_vector(std::size_t r) const;
  FieldVector column(std::size_t c) const;
  std::span<const Residue> data() const noexcept { return data_; }

  FieldMatrix transpose() const;
  FieldMatrix operator-() const;
  // Throws ShapeMismatch / FieldMismatch.
  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) noexcept {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

// Throws NotSquare.
FieldElement determinant(const FieldMatrix& m);

std::size_t rank(const FieldMatrix& m);

// Assembles a block grid. Every block in a grid row must share its height and
// every block in a grid column its width; zero-sized blocks take part in that
// bookkeeping like any other. Throws ShapeMismatch or FieldMismatch.
FieldMatrix stack_blocks(const std::vector<std::vector<FieldMatrix>>& blocks);

// Bit-packed GF(2) vector used by the distance engine's hot loop.
class PackedBits {
 public:
  explicit PackedBits(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}
  // Throws FieldMismatch unless the vector lives in GF(2).
  explicit PackedBits(const FieldVector& v);

  std::size_t size() const noexcept { return length_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  PackedBits& operator^=(const PackedBits& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  std::size_t weight() const noexcept;

 private:
  std::size_t length_;
  std::vector<std::uint64_t> words_;
};

}  // namespace growthcodes
