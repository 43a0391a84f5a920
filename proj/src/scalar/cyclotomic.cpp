#include "qsolv/scalar/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "qsolv/errors.hpp"

namespace qsolv::scalar {

int euler_phi(int l) {
  if (l < 1) throw BadParameters("euler_phi: l must be positive");
  int result = l;
  int n = l;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials with monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {};
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const std::int64_t c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (num[j] != 0) throw NotDivisible("cyclotomic_modulus: inexact division");
  }
  return quot;
}

}  // namespace

IntPoly cyclotomic_modulus(int l) {
  if (l < 1) throw BadParameters("cyclotomic_modulus: l must be positive");
  IntPoly p(static_cast<std::size_t>(l) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(l)] = 1;
  for (int d = 1; d < l; ++d) {
    if (l % d == 0) p = divide_monic(std::move(p), cyclotomic_modulus(d));
  }
  return p;
}

CycField::CycField(int l) : l_(l), phi_(euler_phi(l)), modulus_(cyclotomic_modulus(l)) {
  // eps^k for 0 <= k < l, reduced modulo the cyclotomic polynomial.
  powers_.reserve(static_cast<std::size_t>(l));
  std::vector<std::int64_t> cur(static_cast<std::size_t>(phi_), 0);
  cur[0] = 1;
  for (int k = 0; k < l; ++k) {
    powers_.push_back(cur);
    // multiply by eps
    std::vector<std::int64_t> next(static_cast<std::size_t>(phi_), 0);
    const std::int64_t top = cur[static_cast<std::size_t>(phi_ - 1)];
    for (int j = phi_ - 1; j > 0; --j) next[j] = cur[j - 1];
    next[0] = 0;
    for (int j = 0; j < phi_; ++j) next[j] -= top * modulus_[j];
    cur = std::move(next);
  }
}

const std::vector<std::int64_t>& CycField::power(std::int64_t k) const {
  std::int64_t r = k % l_;
  if (r < 0) r += l_;
  return powers_[static_cast<std::size_t>(r)];
}

std::shared_ptr<const CycField> CycField::get(int l) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycField>> registry;
  if (l < 1) throw BadParameters("CycField: l must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(l);
  if (it != registry.end()) return it->second;
  auto field = std::make_shared<const CycField>(l);
  registry.emplace(l, field);
  return field;
}

const std::shared_ptr<const CycField>& CycField::rationals() {
  static const std::shared_ptr<const CycField> q = get(1);
  return q;
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return a;
  if (a->degree() != b->degree()) return a->degree() > b->degree() ? a : b;
  return a->order() >= b->order() ? a : b;
}

CycScalar::CycScalar() : field_(CycField::rationals()), coeffs_(1) {}

CycScalar::CycScalar(long v) : field_(CycField::rationals()), coeffs_(1, Rational(v)) {}

CycScalar::CycScalar(const Rational& v) : field_(CycField::rationals()), coeffs_(1, v) {
  coeffs_[0].canonicalize();
}

CycScalar::CycScalar(FieldPtr field, const Rational& v)
    : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_->degree())) {
  coeffs_[0] = v;
  coeffs_[0].canonicalize();
}

CycScalar::CycScalar(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(field_->degree())) {
    throw BadParameters("CycScalar: coefficient vector has wrong length");
  }
  for (auto& c : coeffs_) c.canonicalize();
}

CycScalar CycScalar::eps_power(const FieldPtr& field, std::int64_t k) {
  const auto& p = field->power(k);
  std::vector<Rational> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = Rational(static_cast<long>(p[i]));
  return CycScalar(field, std::move(c));
}

bool CycScalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CycScalar::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool CycScalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

CycScalar CycScalar::in_field(const FieldPtr& field) const {
  if (field == field_) return *this;
  if (!is_rational()) {
    throw BadParameters("CycScalar: cannot move a non-rational value between fields Q(eps_" +
                        std::to_string(order()) + ") and Q(eps_" +
                        std::to_string(field->order()) + ")");
  }
  return CycScalar(field, coeffs_[0]);
}

void CycScalar::unify(CycScalar& other) {
  if (field_ == other.field_) return;
  FieldPtr f = common_field(field_, other.field_);
  if (f != field_) *this = in_field(f);
  if (f != other.field_) other = other.in_field(f);
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  if (field_ == o.field_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  CycScalar b = o;
  unify(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  CycScalar b = o;
  unify(b);
  const int phi = field_->degree();
  if (phi == 1) {
    coeffs_[0] *= b.coeffs_[0];
    return *this;
  }
  std::vector<Rational> prod(static_cast<std::size_t>(2 * phi - 1));
  for (int i = 0; i < phi; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      prod[i + j] += coeffs_[i] * b.coeffs_[j];
    }
  }
  std::vector<Rational> out(static_cast<std::size_t>(phi));
  for (int k = 0; k < 2 * phi - 1; ++k) {
    if (sgn(prod[k]) == 0) continue;
    if (k < phi) {
      out[k] += prod[k];
      continue;
    }
    const auto& pw = field_->power(k);
    for (int j = 0; j < phi; ++j) {
      if (pw[j] != 0) out[j] += prod[k] * static_cast<long>(pw[j]);
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw NotDivisible("CycScalar: division by zero");
  const int phi = field_->degree();
  if (phi == 1) return CycScalar(field_, Rational(1) / coeffs_[0]);
  // Solve (multiplication-by-this matrix) * x = e_0 over Q.
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(phi),
                                       std::vector<Rational>(static_cast<std::size_t>(phi) + 1));
  for (int j = 0; j < phi; ++j) {
    CycScalar col = *this * eps_power(field_, j);
    for (int i = 0; i < phi; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][phi] = 1;
  for (int c = 0; c < phi; ++c) {
    int piv = c;
    while (piv < phi && sgn(m[piv][c]) == 0) ++piv;
    if (piv == phi) throw NotDivisible("CycScalar: singular multiplication matrix");
    std::swap(m[piv], m[c]);
    const Rational inv = Rational(1) / m[c][c];
    for (int j = c; j <= phi; ++j) m[c][j] *= inv;
    for (int r = 0; r < phi; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c];
      for (int j = c; j <= phi; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> x(static_cast<std::size_t>(phi));
  for (int i = 0; i < phi; ++i) x[i] = m[i][phi];
  return CycScalar(field_, std::move(x));
}

CycScalar& CycScalar::operator/=(const CycScalar& o) { return *this *= o.inverse(); }

CycScalar CycScalar::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar result(field_, Rational(1));
  CycScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  return false;
}

std::string CycScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "e";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace qsolv::scalar
