#include "qsolv/core/ncpoly.hpp"

#include <sstream>

namespace qsolv::core {

Exponents zero_exponents(std::size_t m) { return Exponents(m, 0); }

Exponents unit_exponents(std::size_t m, std::size_t i, std::int64_t e) {
  Exponents t(m, 0);
  t[i] = e;
  return t;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

std::int64_t total_degree(const Exponents& t) {
  std::int64_t d = 0;
  for (auto e : t) d += e < 0 ? -e : e;
  return d;
}

std::string monomial_to_string(const Exponents& t) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << (i + 1);
    if (t[i] != 1) os << "^" << t[i];
  }
  return first ? "1" : os.str();
}

namespace {

template <class Poly>
std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : p.terms()) {
    std::string cs = c.to_string();
    const std::string mono = monomial_to_string(t);
    bool negative = false;
    const bool compound = cs.find_first_of(" ") != std::string::npos;
    if (!compound && cs[0] == '-') {
      negative = true;
      cs = cs.substr(1);
    }
    std::string term;
    if (mono == "1") {
      term = compound ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      term = mono;
    } else {
      term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    }
    if (first) {
      os << (negative ? "-" : "") << term;
    } else {
      os << (negative ? " - " : " + ") << term;
    }
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_string(const NcPoly& p) { return poly_to_string(p); }
std::string to_string(const SpecPoly& p) { return poly_to_string(p); }

SpecPoly specialize(const NcPoly& p, const FieldPtr& field) {
  SpecPoly r;
  for (const auto& [t, c] : p.terms()) r.add_term(t, scalar::eval_at_eps(c, field));
  return r;
}

NcPoly lift(const SpecPoly& p) {
  NcPoly r;
  for (const auto& [t, c] : p.terms()) r.add_term(t, QLaurent(c));
  return r;
}

NcPoly divide_by_q_minus_eps(const NcPoly& p, const FieldPtr& field) {
  NcPoly r;
  for (const auto& [t, c] : p.terms()) r.add_term(t, scalar::exact_div_q_minus_eps(c, field));
  return r;
}

}  // namespace qsolv::core
