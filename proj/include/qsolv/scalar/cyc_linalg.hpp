#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qsolv/scalar/cyclotomic.hpp"

namespace qsolv::scalar {

/// Dense matrix over Q(eps).
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols, FieldPtr field);

  static CycMatrix identity(std::size_t n, const FieldPtr& field);
  static CycMatrix scalar(std::size_t n, const CycScalar& c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  CycScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycScalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const;
  /// True when the matrix equals c * I for some c; stores c.
  bool is_scalar(CycScalar* value = nullptr) const;
  CycMatrix transpose() const;
  CycMatrix pow(std::int64_t e) const;

  CycMatrix& operator+=(const CycMatrix& o);
  CycMatrix& operator-=(const CycMatrix& o);
  CycMatrix& operator*=(const CycScalar& c);
  friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) { return a += b; }
  friend CycMatrix operator-(CycMatrix a, const CycMatrix& b) { return a -= b; }
  friend CycMatrix operator*(CycMatrix a, const CycScalar& c) { return a *= c; }
  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);
  friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldPtr field_;
  std::vector<CycScalar> data_;
};

CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b);

std::size_t rank(CycMatrix m);
CycScalar determinant(CycMatrix m);
/// Throws NotDivisible when singular.
CycMatrix inverse(const CycMatrix& m);
/// Basis of {v : m v = 0}.
std::vector<std::vector<CycScalar>> nullspace(const CycMatrix& m);

/// Incremental row echelon form for sparse systems; tracks rank only.
class SparseEchelon {
 public:
  using Row = std::map<std::size_t, CycScalar>;

  /// Returns true when the row was independent of those already added.
  bool add_row(Row row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, Row> pivots_;
};

}  // namespace qsolv::scalar
