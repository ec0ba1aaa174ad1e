#include "growthcodes/linalg.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "growthcodes/errors.hpp"

namespace growthcodes {

namespace {

void require_same_field(const PrimeField& a, const PrimeField& b) {
  if (!(a == b)) {
    throw FieldMismatch("GF(" + std::to_string(a.modulus()) + ") vs GF(" +
                        std::to_string(b.modulus()) + ")");
  }
}

void require_canonical(const PrimeField& field, std::span<const Residue> values) {
  for (Residue v : values) {
    if (v >= field.modulus()) {
      throw InvalidArgument("residue " + std::to_string(v) + " is not canonical mod " +
                            std::to_string(field.modulus()));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldVector

FieldVector::FieldVector(const PrimeField& field, std::size_t length)
    : field_(field), entries_(length, 0) {}

FieldVector::FieldVector(const PrimeField& field, std::vector<Residue> entries)
    : field_(field), entries_(std::move(entries)) {
  require_canonical(field_, entries_);
}

FieldVector FieldVector::from_ints(const PrimeField& field, std::initializer_list<std::int64_t> values) {
  std::vector<Residue> e;
  e.reserve(values.size());
  for (std::int64_t v : values) e.push_back(field.reduce(v));
  return {field, std::move(e)};
}

FieldElement FieldVector::at(std::size_t i) const { return {field_, entries_.at(i)}; }

void FieldVector::set(std::size_t i, Residue v) {
  if (v >= field_.modulus()) throw InvalidArgument("residue out of range");
  entries_.at(i) = v;
}

FieldVector& FieldVector::operator+=(const FieldVector& other) {
  require_same_field(field_, other.field_);
  if (size() != other.size()) {
    throw LengthMismatch(std::to_string(size()) + " vs " + std::to_string(other.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = field_.add(entries_[i], other.entries_[i]);
  return *this;
}

FieldVector& FieldVector::operator-=(const FieldVector& other) {
  require_same_field(field_, other.field_);
  if (size() != other.size()) {
    throw LengthMismatch(std::to_string(size()) + " vs " + std::to_string(other.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = field_.sub(entries_[i], other.entries_[i]);
  return *this;
}

FieldVector FieldVector::scaled(Residue c) const {
  FieldVector out(field_, size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = field_.mul(entries_[i], c);
  return out;
}

std::size_t weight(std::span<const Residue> v) noexcept {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Residue x) { return x != 0; }));
}

std::size_t weight(const FieldVector& v) noexcept { return weight(v.entries()); }

std::size_t hamming_distance(const FieldVector& x, const FieldVector& y) {
  require_same_field(x.field(), y.field());
  if (x.size() != y.size()) {
    throw LengthMismatch(std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

// ---------------------------------------------------------------------------
// FieldMatrix

FieldMatrix::FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix::FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols,
                         std::vector<Residue> data)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw ShapeMismatch("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                        std::to_string(rows * cols));
  }
  require_canonical(field_, data_);
}

FieldMatrix FieldMatrix::identity(const PrimeField& field, std::size_t m) {
  FieldMatrix out(field, m, m);
  for (std::size_t i = 0; i < m; ++i) out(i, i) = 1;
  return out;
}

FieldMatrix FieldMatrix::zero(const PrimeField& field, std::size_t rows, std::size_t cols) {
  return {field, rows, cols};
}

FieldMatrix FieldMatrix::from_ints(const PrimeField& field,
                                   std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Residue> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeMismatch("ragged matrix literal");
    for (std::int64_t v : row) data.push_back(field.reduce(v));
  }
  return {field, r, c, std::move(data)};
}

FieldMatrix FieldMatrix::from_rows(const PrimeField& field, std::span<const FieldVector> rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  std::vector<Residue> data;
  data.reserve(rows.size() * c);
  for (const FieldVector& v : rows) {
    require_same_field(field, v.field());
    if (v.size() != c) {
      throw LengthMismatch("row of length " + std::to_string(v.size()) + ", expected " + std::to_string(c));
    }
    data.insert(data.end(), v.entries().begin(), v.entries().end());
  }
  return {field, rows.size(), c, std::move(data)};
}

FieldVector FieldMatrix::row_vector(std::size_t r) const {
  const auto s = row(r);
  return {field_, std::vector<Residue>(s.begin(), s.end())};
}

FieldVector FieldMatrix::column(std::size_t c) const {
  std::vector<Residue> e(rows_);
  for (std::size_t r = 0; r < rows_; ++r) e[r] = (*this)(r, c);
  return {field_, std::move(e)};
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

FieldMatrix FieldMatrix::operator-() const {
  FieldMatrix out = *this;
  for (Residue& v : out.data_) v = field_.neg(v);
  return out;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) {
    throw ShapeMismatch(std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " times " +
                        std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  const PrimeField& f = a.field_;
  FieldMatrix out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Residue x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
    }
  }
  return out;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix sum of different shapes");
  FieldMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

FieldElement determinant(const FieldMatrix& m) {
  if (m.rows() != m.cols()) {
    throw NotSquare(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const PrimeField& f = m.field();
  const std::size_t n = m.rows();
  FieldMatrix a = m;
  Residue det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return f.zero();
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = f.neg(det);
    }
    det = f.mul(det, a(col, col));
    const Residue pinv = f.inv(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const Residue factor = f.mul(a(r, col), pinv);
      if (factor == 0) continue;
      for (std::size_t c = col; c < n; ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(col, c)));
    }
  }
  return {f, det};
}

std::size_t rank(const FieldMatrix& m) {
  const PrimeField& f = m.field();
  FieldMatrix a = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(r, c));
    }
    const Residue pinv = f.inv(a(r, col));
    for (std::size_t row = r + 1; row < a.rows(); ++row) {
      const Residue factor = f.mul(a(row, col), pinv);
      if (factor == 0) continue;
      for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = f.sub(a(row, c), f.mul(factor, a(r, c)));
    }
    ++r;
  }
  return r;
}

FieldMatrix stack_blocks(const std::vector<std::vector<FieldMatrix>>& blocks) {
  if (blocks.empty()) throw ShapeMismatch("empty block grid");
  const std::size_t grid_cols = blocks.front().size();
  if (grid_cols == 0) throw ShapeMismatch("empty block row");
  const PrimeField& field = blocks.front().front().field();

  std::vector<std::size_t> widths(grid_cols);
  for (std::size_t c = 0; c < grid_cols; ++c) widths[c] = blocks.front()[c].cols();
  std::vector<std::size_t> heights;
  for (const auto& grid_row : blocks) {
    if (grid_row.size() != grid_cols) throw ShapeMismatch("ragged block grid");
    const std::size_t h = grid_row.front().rows();
    for (std::size_t c = 0; c < grid_cols; ++c) {
      require_same_field(field, grid_row[c].field());
      if (grid_row[c].rows() != h) throw ShapeMismatch("block heights differ within a block row");
      if (grid_row[c].cols() != widths[c]) throw ShapeMismatch("block widths differ within a block column");
    }
    heights.push_back(h);
  }

  std::size_t total_rows = 0, total_cols = 0;
  for (std::size_t h : heights) total_rows += h;
  for (std::size_t w : widths) total_cols += w;

  FieldMatrix out(field, total_rows, total_cols);
  std::size_t row0 = 0;
  for (std::size_t br = 0; br < blocks.size(); ++br) {
    std::size_t col0 = 0;
    for (std::size_t bc = 0; bc < grid_cols; ++bc) {
      const FieldMatrix& b = blocks[br][bc];
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(row0 + r, col0 + c) = b(r, c);
      col0 += widths[bc];
    }
    row0 += heights[br];
  }
  return out;
}

// ---------------------------------------------------------------------------
// PackedBits

PackedBits::PackedBits(const FieldVector& v) : PackedBits(v.size()) {
  if (v.field().modulus() != 2) throw FieldMismatch("bit packing requires GF(2)");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

std::size_t PackedBits::weight() const noexcept {
  std::size_t w = 0;
  for (std::uint64_t word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

}  // namespace growthcodes
