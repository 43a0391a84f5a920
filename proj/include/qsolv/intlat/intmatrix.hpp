#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qsolv::intlat {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

/// Overflow-checked 64-bit arithmetic; throws TooLarge on overflow.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
/// Floor division (rounds toward negative infinity).
Int floor_div(Int a, Int b);
/// Representative of a modulo m in [0, m).
Int mod_pos(Int a, Int m);
Int gcd(Int a, Int b);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  IntMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_skew_symmetric() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row a += c * row b
  void add_row_multiple(std::size_t a, std::size_t b, Int c);
  /// col a += c * col b
  void add_col_multiple(std::size_t a, std::size_t b, Int c);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant by fraction-free elimination.
Int determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);
/// Inverse of a unimodular matrix; throws BadParameters otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

}  // namespace qsolv::intlat
