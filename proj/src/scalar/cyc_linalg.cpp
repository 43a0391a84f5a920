#include "qsolv/scalar/cyc_linalg.hpp"

#include <sstream>
#include <utility>

#include "qsolv/errors.hpp"

namespace qsolv::scalar {

CycMatrix::CycMatrix(std::size_t rows, std::size_t cols, FieldPtr field)
    : rows_(rows), cols_(cols), field_(std::move(field)),
      data_(rows * cols, CycScalar(field_, Rational(0))) {}

CycMatrix CycMatrix::identity(std::size_t n, const FieldPtr& field) {
  CycMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycScalar(field, Rational(1));
  return m;
}

CycMatrix CycMatrix::scalar(std::size_t n, const CycScalar& c) {
  CycMatrix m(n, n, c.field());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

bool CycMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool CycMatrix::is_scalar(CycScalar* value) const {
  if (rows_ != cols_) return false;
  if (rows_ == 0) {
    if (value) *value = CycScalar(field_, Rational(0));
    return true;
  }
  const CycScalar& c = (*this)(0, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const CycScalar& x = (*this)(i, j);
      if (i == j ? x != c : !x.is_zero()) return false;
    }
  }
  if (value) *value = c;
  return true;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

CycMatrix CycMatrix::pow(std::int64_t e) const {
  if (e < 0) return inverse(*this).pow(-e);
  CycMatrix result = identity(rows_, field_);
  CycMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

CycMatrix& CycMatrix::operator+=(const CycMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw BadParameters("CycMatrix: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CycMatrix& CycMatrix::operator-=(const CycMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw BadParameters("CycMatrix: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CycMatrix& CycMatrix::operator*=(const CycScalar& c) {
  for (auto& x : data_) {
    if (!x.is_zero()) x *= c;
  }
  return *this;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols_ != b.rows_) throw BadParameters("CycMatrix: shape mismatch in product");
  CycMatrix r(a.rows_, b.cols_, common_field(a.field_, b.field_));
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycScalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycScalar& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  }
  return r;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string CycMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix r(a.rows() * b.rows(), a.cols() * b.cols(), common_field(a.field(), b.field()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t m = 0; m < b.cols(); ++m) {
          if (!b(k, m).is_zero()) r(i * b.rows() + k, j * b.cols() + m) = a(i, j) * b(k, m);
        }
      }
    }
  }
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(CycMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    const CycScalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const CycScalar f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(CycMatrix m) { return rref(m).size(); }

CycScalar determinant(CycMatrix m) {
  if (m.rows() != m.cols()) throw BadParameters("determinant: matrix is not square");
  const std::size_t n = m.rows();
  CycScalar det(m.field(), Rational(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return CycScalar(m.field(), Rational(0));
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const CycScalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const CycScalar f = m(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) {
        if (!m(col, j).is_zero()) m(r, j) -= f * m(col, j);
      }
    }
  }
  return det;
}

CycMatrix inverse(const CycMatrix& m) {
  if (m.rows() != m.cols()) throw BadParameters("inverse: matrix is not square");
  const std::size_t n = m.rows();
  CycMatrix aug(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = CycScalar(m.field(), Rational(1));
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw NotDivisible("inverse: matrix is singular");
  }
  CycMatrix r(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  }
  return r;
}

std::vector<std::vector<CycScalar>> nullspace(const CycMatrix& m) {
  CycMatrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<CycScalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<CycScalar> v(m.cols(), CycScalar(m.field(), Rational(0)));
    v[free] = CycScalar(m.field(), Rational(1));
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool SparseEchelon::add_row(Row row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->second.is_zero()) {
      it = row.erase(it);
    } else {
      ++it;
    }
  }
  while (!row.empty()) {
    const std::size_t lead = row.begin()->first;
    auto piv = pivots_.find(lead);
    if (piv == pivots_.end()) {
      const CycScalar inv = row.begin()->second.inverse();
      for (auto& [c, v] : row) v *= inv;
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    const CycScalar f = row.begin()->second;
    for (const auto& [c, v] : piv->second) {
      auto [it, inserted] = row.try_emplace(c, -(f * v));
      if (!inserted) {
        it->second -= f * v;
        if (it->second.is_zero()) row.erase(it);
      }
    }
  }
  return false;
}

}  // namespace qsolv::scalar
