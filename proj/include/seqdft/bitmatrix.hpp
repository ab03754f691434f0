#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace seqdft {

using Bits = std::vector<uint8_t>;

// Dense matrix over GF(2) with bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols);

  static BitMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  bool get(size_t r, size_t c) const { return data_[r * stride_ + c / 64] >> (c % 64) & 1; }
  void set(size_t r, size_t c, bool v);

  // Row vector times matrix.
  Bits left_mul(const Bits& row) const;
  // Matrix times column vector.
  Bits right_mul(const Bits& col) const;

  size_t rank() const;
  int det() const;

  // A solution of M x = rhs, or nothing when the system is inconsistent.
  // unique is set when M has full column rank.
  std::optional<Bits> solve(const Bits& rhs, bool* unique = nullptr) const;

  // Basis of {x : M x = 0}.
  std::vector<Bits> nullspace() const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

  BitMatrix pow(uint64_t e) const;

 private:
  void xor_row(size_t dst, size_t src);
  void swap_rows(size_t a, size_t b);

  size_t rows_ = 0;
  size_t cols_ = 0;
  size_t stride_ = 0;
  std::vector<uint64_t> data_;
};

}  // namespace seqdft
