#include "qsolv/intlat/intmatrix.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

#include "qsolv/errors.hpp"

namespace qsolv::intlat {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw TooLarge("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw TooLarge("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw TooLarge("integer overflow in multiplication");
  return r;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_pos(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw BadParameters("IntMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw BadParameters("IntMatrix: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
  IntMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
  }
  return s;
}

bool IntMatrix::is_zero() const {
  for (Int x : data_) {
    if (x != 0) return false;
  }
  return true;
}

bool IntMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
  }
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, Int c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    (*this)(a, j) = checked_add((*this)(a, j), checked_mul(c, (*this)(b, j)));
  }
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, Int c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    (*this)(i, a) = checked_add((*this)(i, a), checked_mul(c, (*this)(i, b)));
  }
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = checked_sub(0, (*this)(a, j));
}

void IntMatrix::negate_col(std::size_t a) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = checked_sub(0, (*this)(i, a));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw BadParameters("IntMatrix: shape mismatch in product");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        r(i, j) = checked_add(r(i, j), checked_mul(x, b(k, j)));
      }
    }
  }
  return r;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) throw BadParameters("IntMatrix: shape mismatch in product");
  IntVector r(a.rows_, 0);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] = checked_add(r[i], checked_mul(a(i, j), v[j]));
  }
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Int determinant(const IntMatrix& a) {
  if (!a.is_square()) throw BadParameters("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  std::vector<__int128> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j);
  }
  auto at = [&](std::size_t i, std::size_t j) -> __int128& { return m[i * n + j]; };
  constexpr __int128 kLimit = static_cast<__int128>(1) << 62;
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Entries stay bounded by minors of a, so the products fit in 128 bits
        // as long as each entry fits in 62.
        __int128 v = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        if (v > kLimit || v < -kLimit) throw TooLarge("determinant: entries exceed 62 bits");
        at(i, j) = v;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return static_cast<Int>(sign * at(n - 1, n - 1));
}

bool is_unimodular(const IntMatrix& a) {
  if (!a.is_square()) return false;
  const Int d = determinant(a);
  return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!a.is_square()) throw BadParameters("unimodular_inverse: matrix is not square");
  const std::size_t n = a.rows();
  IntMatrix m = a;
  IntMatrix inv = IntMatrix::identity(n);
  // Euclidean row reduction of [a | I] to [I | a^{-1}].
  for (std::size_t col = 0; col < n; ++col) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t r = col; r < n; ++r) {
        if (m(r, col) != 0 && (best == n || std::llabs(m(r, col)) < std::llabs(m(best, col)))) {
          best = r;
        }
      }
      if (best == n) throw BadParameters("unimodular_inverse: matrix is singular");
      m.swap_rows(col, best);
      inv.swap_rows(col, best);
      bool done = true;
      for (std::size_t r = col + 1; r < n; ++r) {
        if (m(r, col) == 0) continue;
        const Int q = floor_div(m(r, col), m(col, col));
        m.add_row_multiple(r, col, -q);
        inv.add_row_multiple(r, col, -q);
        if (m(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (m(col, col) == -1) {
      m.negate_row(col);
      inv.negate_row(col);
    }
    if (m(col, col) != 1) throw BadParameters("unimodular_inverse: matrix is not unimodular");
  }
  for (std::size_t col = n; col-- > 0;) {
    for (std::size_t r = 0; r < col; ++r) {
      const Int c = m(r, col);
      m.add_row_multiple(r, col, -c);
      inv.add_row_multiple(r, col, -c);
    }
  }
  return inv;
}

}  // namespace qsolv::intlat
