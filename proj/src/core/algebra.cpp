#include "qsolv/core/algebra.hpp"

#include "qsolv/errors.hpp"

namespace qsolv::core {

NcPoly Algebra::one() const { return NcPoly::constant(dimension(), QLaurent(1L)); }

NcPoly Algebra::constant(const QLaurent& c) const {
  NcPoly p;
  for (const auto& [e, coeff] : c.terms()) {
    p += NcPoly::constant(dimension(), QLaurent::monomial(e, coeff));
  }
  return p;
}

NcPoly Algebra::generator(std::size_t i, std::int64_t e) const {
  if (i >= dimension()) throw BadParameters("generator index out of range");
  return monomial(unit_exponents(dimension(), i, e));
}

NcPoly Algebra::monomial(const Exponents& t, const QLaurent& c) const {
  check_exponents(t);
  return NcPoly::monomial(t, c);
}

NcPoly Algebra::power(const NcPoly& a, std::int64_t e) const {
  if (e < 0) throw BadParameters("power: negative exponent");
  NcPoly result = one();
  NcPoly base = a;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

NcPoly Algebra::commutator(const NcPoly& a, const NcPoly& b) const {
  return multiply(a, b) - multiply(b, a);
}

SpecPoly Algebra::multiply_at(const SpecPoly& a, const SpecPoly& b, const FieldPtr& field) const {
  return specialize(multiply(lift(a), lift(b)), field);
}

void Algebra::check_exponents(const Exponents& t) const {
  if (t.size() != dimension()) throw BadParameters("monomial has wrong number of exponents");
  for (std::size_t i = 0; i < num_skew(); ++i) {
    if (t[i] < 0) {
      throw BadParameters("negative exponent on non-invertible generator x" + std::to_string(i + 1));
    }
  }
}

}  // namespace qsolv::core
