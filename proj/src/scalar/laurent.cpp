#include "qsolv/scalar/laurent.hpp"

#include <sstream>
#include <vector>

#include "qsolv/errors.hpp"

namespace qsolv::scalar {

QLaurent::QLaurent(long c) {
  if (c != 0) terms_.emplace(0, CycScalar(c));
}

QLaurent::QLaurent(const CycScalar& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

QLaurent QLaurent::monomial(std::int64_t exponent, const CycScalar& c) {
  QLaurent p;
  if (!c.is_zero()) p.terms_.emplace(exponent, c);
  return p;
}

bool QLaurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

std::int64_t QLaurent::min_exponent() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

std::int64_t QLaurent::max_exponent() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

CycScalar QLaurent::coeff(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? CycScalar() : it->second;
}

void QLaurent::add_term(std::int64_t e, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QLaurent QLaurent::shifted(std::int64_t k) const {
  if (k == 0) return *this;
  QLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) { return *this = *this * o; }

QLaurent& QLaurent::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

bool operator==(const QLaurent& a, const QLaurent& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (e != ib->first || c != ib->second) return false;
    ++ib;
  }
  return true;
}

QLaurent QLaurent::pow(std::int64_t e) const {
  if (e < 0) {
    if (!is_monomial()) throw NotDivisible("QLaurent::pow: only monomials are invertible");
    const auto& [ex, c] = *terms_.begin();
    return monomial(-ex, c.inverse()).pow(-e);
  }
  QLaurent result(1L);
  QLaurent base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string QLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.to_string();
    const bool compound = !c.is_rational();
    bool negative = !compound && sgn(c.rational_part()) < 0;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    if (negative) cs = cs.substr(1);
    if (e == 0) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (compound) {
      os << "(" << cs << ")*";
    } else if (cs != "1") {
      os << cs << "*";
    }
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

CycScalar eval_at_eps(const QLaurent& p, const FieldPtr& field) {
  CycScalar acc(field, Rational(0));
  for (const auto& [e, c] : p.terms()) acc += c * CycScalar::eps_power(field, e);
  return acc;
}

QLaurent exact_div_q_minus_eps(const QLaurent& p, const FieldPtr& field) {
  if (p.is_zero()) return p;
  const std::int64_t lo = p.min_exponent();
  const std::int64_t hi = p.max_exponent();
  // Synthetic division of P(q) = q^{-lo} p by (q - eps), highest degree first.
  const CycScalar eps = CycScalar::eps_power(field, 1);
  std::vector<CycScalar> quot(static_cast<std::size_t>(hi - lo));
  CycScalar carry(field, Rational(0));
  for (std::int64_t k = hi; k >= lo; --k) {
    carry = carry * eps + p.coeff(k);
    if (k > lo) quot[static_cast<std::size_t>(k - lo - 1)] = carry;
  }
  if (!carry.is_zero()) {
    throw NotDivisible("exact_div_q_minus_eps: p(eps) = " + carry.to_string() + " is nonzero");
  }
  QLaurent r;
  for (std::size_t i = 0; i < quot.size(); ++i) {
    r += QLaurent::monomial(lo + static_cast<std::int64_t>(i), quot[i]);
  }
  return r;
}

int eps_valuation(const QLaurent& p, const FieldPtr& field, int cap) {
  QLaurent cur = p;
  int v = 0;
  while (v < cap) {
    if (cur.is_zero()) return cap;
    if (!eval_at_eps(cur, field).is_zero()) return v;
    cur = exact_div_q_minus_eps(cur, field);
    ++v;
  }
  return v;
}

QLaurent divide_exact(const QLaurent& a, const QLaurent& b) {
  if (b.is_zero()) throw NotDivisible("divide_exact: division by zero");
  if (a.is_zero()) return a;
  const std::int64_t lo_a = a.min_exponent();
  const std::int64_t lo_b = b.min_exponent();
  const std::int64_t deg_b = b.max_exponent() - lo_b;
  const CycScalar lead_inv = b.coeff(b.max_exponent()).inverse();
  // Work with the polynomial parts A = q^{-lo_a} a, B = q^{-lo_b} b.
  QLaurent rem = a.shifted(-lo_a);
  const QLaurent divisor = b.shifted(-lo_b);
  QLaurent quot;
  while (!rem.is_zero() && rem.max_exponent() >= deg_b) {
    const std::int64_t shift = rem.max_exponent() - deg_b;
    const CycScalar c = rem.coeff(rem.max_exponent()) * lead_inv;
    QLaurent t = QLaurent::monomial(shift, c);
    quot += t;
    rem -= t * divisor;
  }
  if (!rem.is_zero()) {
    throw NotDivisible("divide_exact: (" + a.to_string() + ") / (" + b.to_string() +
                       ") leaves remainder " + rem.to_string());
  }
  return quot.shifted(lo_a - lo_b);
}

}  // namespace qsolv::scalar
