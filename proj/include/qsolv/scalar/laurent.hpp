#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qsolv/scalar/cyclotomic.hpp"

namespace qsolv::scalar {

/// Laurent polynomial in q with coefficients in Q(eps).  Zero coefficients
/// are never stored, so structural equality is value equality.
class QLaurent {
 public:
  using Terms = std::map<std::int64_t, CycScalar>;

  QLaurent() = default;
  QLaurent(long c);  // NOLINT(google-explicit-constructor)
  QLaurent(const CycScalar& c);  // NOLINT(google-explicit-constructor)

  static QLaurent monomial(std::int64_t exponent, const CycScalar& c = CycScalar(1L));
  static QLaurent q() { return monomial(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;
  CycScalar coeff(std::int64_t exponent) const;
  CycScalar constant_term() const { return coeff(0); }

  /// Multiplies by q^k.
  QLaurent shifted(std::int64_t k) const;

  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  QLaurent& operator*=(const CycScalar& c);

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator*(QLaurent a, const CycScalar& c) { return a *= c; }
  friend bool operator==(const QLaurent& a, const QLaurent& b);
  friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

  QLaurent pow(std::int64_t e) const;

  std::string to_string() const;

 private:
  void add_term(std::int64_t e, const CycScalar& c);
  Terms terms_;
};

/// q -> eps, reduced in the field.
CycScalar eval_at_eps(const QLaurent& p, const FieldPtr& field);

/// p / (q - eps); throws NotDivisible when p(eps) != 0.
QLaurent exact_div_q_minus_eps(const QLaurent& p, const FieldPtr& field);

/// Multiplicity of eps as a root of p, capped at `cap` (zero polynomial
/// reports `cap`).
int eps_valuation(const QLaurent& p, const FieldPtr& field, int cap = 64);

/// a / b in the Laurent ring; throws NotDivisible when inexact.
QLaurent divide_exact(const QLaurent& a, const QLaurent& b);

}  // namespace qsolv::scalar
