#include "seqdft/bitmatrix.hpp"

#include <utility>

#include "seqdft/error.hpp"

namespace seqdft {

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(size_t n) {
  BitMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void BitMatrix::set(size_t r, size_t c, bool v) {
  uint64_t& w = data_[r * stride_ + c / 64];
  uint64_t bit = uint64_t{1} << (c % 64);
  w = v ? (w | bit) : (w & ~bit);
}

void BitMatrix::xor_row(size_t dst, size_t src) {
  for (size_t i = 0; i < stride_; ++i) data_[dst * stride_ + i] ^= data_[src * stride_ + i];
}

void BitMatrix::swap_rows(size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < stride_; ++i) std::swap(data_[a * stride_ + i], data_[b * stride_ + i]);
}

Bits BitMatrix::left_mul(const Bits& row) const {
  if (row.size() != rows_) invalid("vector length does not match matrix rows");
  Bits out(cols_, 0);
  for (size_t r = 0; r < rows_; ++r) {
    if (!row[r]) continue;
    for (size_t c = 0; c < cols_; ++c) out[c] ^= get(r, c);
  }
  return out;
}

Bits BitMatrix::right_mul(const Bits& col) const {
  if (col.size() != cols_) invalid("vector length does not match matrix columns");
  Bits out(rows_, 0);
  for (size_t r = 0; r < rows_; ++r) {
    uint8_t acc = 0;
    for (size_t c = 0; c < cols_; ++c) acc ^= static_cast<uint8_t>(get(r, c) & (col[c] & 1));
    out[r] = acc;
  }
  return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols_ != b.rows_) invalid("matrix shapes do not agree");
  BitMatrix out(a.rows_, b.cols_);
  for (size_t r = 0; r < a.rows_; ++r) {
    for (size_t k = 0; k < a.cols_; ++k) {
      if (!a.get(r, k)) continue;
      for (size_t i = 0; i < out.stride_; ++i) out.data_[r * out.stride_ + i] ^= b.data_[k * b.stride_ + i];
    }
  }
  return out;
}

BitMatrix BitMatrix::pow(uint64_t e) const {
  if (rows_ != cols_) invalid("matrix power needs a square matrix");
  BitMatrix result = identity(rows_);
  BitMatrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

size_t BitMatrix::rank() const {
  BitMatrix m = *this;
  size_t rank = 0;
  for (size_t c = 0; c < cols_ && rank < rows_; ++c) {
    size_t p = rank;
    while (p < rows_ && !m.get(p, c)) ++p;
    if (p == rows_) continue;
    m.swap_rows(rank, p);
    for (size_t r = 0; r < rows_; ++r) {
      if (r != rank && m.get(r, c)) m.xor_row(r, rank);
    }
    ++rank;
  }
  return rank;
}

int BitMatrix::det() const {
  if (rows_ != cols_) invalid("determinant needs a square matrix");
  return rank() == rows_ ? 1 : 0;
}

std::optional<Bits> BitMatrix::solve(const Bits& rhs, bool* unique) const {
  if (rhs.size() != rows_) invalid("right-hand side length does not match matrix rows");
  BitMatrix aug(rows_, cols_ + 1);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) aug.set(r, c, get(r, c));
    aug.set(r, cols_, rhs[r] & 1);
  }
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t c = 0; c < cols_ && row < rows_; ++c) {
    size_t p = row;
    while (p < rows_ && !aug.get(p, c)) ++p;
    if (p == rows_) continue;
    aug.swap_rows(row, p);
    for (size_t r = 0; r < rows_; ++r) {
      if (r != row && aug.get(r, c)) aug.xor_row(r, row);
    }
    pivots.push_back(c);
    ++row;
  }
  for (size_t r = row; r < rows_; ++r) {
    if (aug.get(r, cols_)) return std::nullopt;
  }
  if (unique) *unique = pivots.size() == cols_;
  Bits x(cols_, 0);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.get(i, cols_);
  return x;
}

std::vector<Bits> BitMatrix::nullspace() const {
  BitMatrix m = *this;
  std::vector<size_t> pivots;
  std::vector<int> pivot_row(cols_, -1);
  size_t row = 0;
  for (size_t c = 0; c < cols_ && row < rows_; ++c) {
    size_t p = row;
    while (p < rows_ && !m.get(p, c)) ++p;
    if (p == rows_) continue;
    m.swap_rows(row, p);
    for (size_t r = 0; r < rows_; ++r) {
      if (r != row && m.get(r, c)) m.xor_row(r, row);
    }
    pivot_row[c] = static_cast<int>(row);
    pivots.push_back(c);
    ++row;
  }
  std::vector<Bits> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (pivot_row[free] >= 0) continue;
    Bits v(cols_, 0);
    v[free] = 1;
    for (size_t pc : pivots) {
      if (m.get(static_cast<size_t>(pivot_row[pc]), free)) v[pc] = 1;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace seqdft
