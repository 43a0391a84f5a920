#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace qsolv::scalar {

using Rational = mpq_class;

/// Dense integer polynomial, coefficient of q^k at index k.
using IntPoly = std::vector<std::int64_t>;

int euler_phi(int l);

/// The l-th cyclotomic polynomial, i.e. the minimal polynomial of a
/// primitive l-th root of unity over Q.
IntPoly cyclotomic_modulus(int l);

/// The field Q(eps) for a primitive l-th root of unity eps, presented in the
/// power basis 1, eps, ..., eps^(phi(l)-1).  Instances are interned per l.
class CycField {
 public:
  static std::shared_ptr<const CycField> get(int l);
  static const std::shared_ptr<const CycField>& rationals();

  int order() const { return l_; }
  int degree() const { return phi_; }
  const IntPoly& modulus() const { return modulus_; }

  /// eps^k in the power basis; k is reduced modulo l.
  const std::vector<std::int64_t>& power(std::int64_t k) const;

  explicit CycField(int l);

 private:
  int l_;
  int phi_;
  IntPoly modulus_;
  std::vector<std::vector<std::int64_t>> powers_;
};

using FieldPtr = std::shared_ptr<const CycField>;

/// An exact element of Q(eps).  Values that happen to be rational mix freely
/// with elements of any field; two genuinely different fields do not.
class CycScalar {
 public:
  CycScalar();
  CycScalar(long v);  // NOLINT(google-explicit-constructor)
  CycScalar(const Rational& v);  // NOLINT(google-explicit-constructor)
  CycScalar(FieldPtr field, const Rational& v);
  CycScalar(FieldPtr field, std::vector<Rational> coeffs);

  static CycScalar eps_power(const FieldPtr& field, std::int64_t k);

  const FieldPtr& field() const { return field_; }
  int order() const { return field_->order(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Only meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  /// Re-expresses a rational value in another field.  Throws if this value
  /// is not rational and the fields differ.
  CycScalar in_field(const FieldPtr& field) const;

  CycScalar inverse() const;
  CycScalar pow(std::int64_t e) const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) {
    return !(a == b);
  }

  /// Human-readable form using `e` for eps, e.g. "1/2 - e + 3*e^2".
  std::string to_string() const;

 private:
  void unify(CycScalar& other);
  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

/// Picks the common field of two scalars (the non-rational one wins).
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace qsolv::scalar
