#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "qsolv/core/ncpoly.hpp"
#include "qsolv/intlat/intmatrix.hpp"

namespace qsolv::core {

/// An algebra on generators x_1..x_M, the last M - n of them invertible,
/// with normal-ordered monomials as a basis over Q(eps)[q, q^-1] and
/// relations x_i x_j = q^{s_ij} x_j x_i + r_ij for i < j.
class Algebra {
 public:
  virtual ~Algebra() = default;

  virtual std::size_t dimension() const = 0;
  /// Number of non-invertible generators; they come first.
  virtual std::size_t num_skew() const = 0;
  virtual const intlat::IntMatrix& skew_matrix() const = 0;
  /// r_ij for i < j (zero when the pair q-commutes).
  virtual NcPoly relation_term(std::size_t i, std::size_t j) const = 0;
  virtual NcPoly multiply(const NcPoly& a, const NcPoly& b) const = 0;

  bool is_invertible(std::size_t i) const { return i >= num_skew(); }

  NcPoly one() const;
  NcPoly constant(const QLaurent& c) const;
  NcPoly generator(std::size_t i, std::int64_t e = 1) const;
  NcPoly monomial(const Exponents& t, const QLaurent& c = QLaurent(1L)) const;
  NcPoly power(const NcPoly& a, std::int64_t e) const;
  NcPoly commutator(const NcPoly& a, const NcPoly& b) const;

  /// Product in the specialization at q = eps.
  SpecPoly multiply_at(const SpecPoly& a, const SpecPoly& b, const FieldPtr& field) const;

  /// Exponents must have length dimension() and be non-negative on the
  /// non-invertible generators.
  void check_exponents(const Exponents& t) const;
};

}  // namespace qsolv::core
