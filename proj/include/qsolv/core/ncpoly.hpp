#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsolv/scalar/cyclotomic.hpp"
#include "qsolv/scalar/laurent.hpp"

namespace qsolv::core {

using scalar::CycScalar;
using scalar::FieldPtr;
using scalar::QLaurent;

/// Multidegree of a normal-ordered monomial x_1^{t_1} ... x_M^{t_M}.
using Exponents = std::vector<std::int64_t>;

Exponents zero_exponents(std::size_t m);
Exponents unit_exponents(std::size_t m, std::size_t i, std::int64_t e = 1);
Exponents add_exponents(const Exponents& a, const Exponents& b);
std::int64_t total_degree(const Exponents& t);

/// Formats x1^2*x3 style monomials; "1" for the empty monomial.
std::string monomial_to_string(const Exponents& t);

/// Finite linear combination of normal-ordered monomials over a coefficient
/// type (QLaurent before specialization, CycScalar after).  Zero
/// coefficients are never stored.
template <class Coeff>
class BasicPoly {
 public:
  using Terms = std::map<Exponents, Coeff>;

  BasicPoly() = default;

  static BasicPoly constant(std::size_t m, const Coeff& c) {
    return monomial(zero_exponents(m), c);
  }
  static BasicPoly monomial(const Exponents& t, const Coeff& c) {
    BasicPoly p;
    p.add_term(t, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Coeff coeff(const Exponents& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add_term(const Exponents& t, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  BasicPoly operator-() const {
    BasicPoly r;
    for (const auto& [t, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), t, -c);
    return r;
  }
  BasicPoly& operator+=(const BasicPoly& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
  }
  template <class S>
  BasicPoly& scale(const S& s) {
    BasicPoly r;
    for (const auto& [t, c] : terms_) r.add_term(t, c * s);
    return *this = std::move(r);
  }
  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

  std::int64_t max_degree() const {
    std::int64_t d = 0;
    for (const auto& [t, c] : terms_) d = std::max(d, total_degree(t));
    return d;
  }

  /// Applies f to every monomial and its coefficient.
  BasicPoly transform(const std::function<Coeff(const Exponents&, const Coeff&)>& f) const {
    BasicPoly r;
    for (const auto& [t, c] : terms_) r.add_term(t, f(t, c));
    return r;
  }

 private:
  Terms terms_;
};

using NcPoly = BasicPoly<QLaurent>;
using SpecPoly = BasicPoly<CycScalar>;

inline NcPoly operator*(NcPoly a, const QLaurent& s) { return a.scale(s); }
inline SpecPoly operator*(SpecPoly a, const CycScalar& s) { return a.scale(s); }

std::string to_string(const NcPoly& p);
std::string to_string(const SpecPoly& p);

/// Coefficientwise q -> eps.
SpecPoly specialize(const NcPoly& p, const FieldPtr& field);
/// The constant-in-q preimage of a specialized element.
NcPoly lift(const SpecPoly& p);
/// Coefficientwise division by (q - eps); throws NotDivisible.
NcPoly divide_by_q_minus_eps(const NcPoly& p, const FieldPtr& field);

}  // namespace qsolv::core
