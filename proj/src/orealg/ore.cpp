#include "qsolv/orealg/ore.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "qsolv/errors.hpp"
#include "qsolv/qtorus/torus.hpp"
#include "qsolv/scalar/qnumbers.hpp"

namespace qsolv::orealg {

namespace {

std::string pair_name(std::size_t i, std::size_t j) {
  return "r_" + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

std::vector<Violation> structural_violations(const OreAlgebraSpec& spec) {
  std::vector<Violation> v;
  const std::size_t M = spec.dimension();
  if (spec.S.rows() != M || spec.S.cols() != M) {
    v.push_back({"shape", "S must be " + std::to_string(M) + "x" + std::to_string(M)});
  }
  if (spec.W.rows() != 0 && (spec.W.rows() != M || spec.W.cols() != M)) {
    v.push_back({"shape", "W must be " + std::to_string(M) + "x" + std::to_string(M)});
  }
  if (spec.skew_constants.size() != spec.n) {
    v.push_back({"shape", "expected " + std::to_string(spec.n) + " skew constants"});
  }
  for (const auto& [key, r] : spec.relations) {
    const auto [i, j] = key;
    if (!(i < j && j < spec.n)) {
      v.push_back({"shape", "relation (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") must satisfy i < j <= n"});
      continue;
    }
    for (const auto& [t, c] : r.terms()) {
      if (t.size() != M) {
        v.push_back({"shape", pair_name(i, j) + " has a monomial of the wrong length"});
        break;
      }
    }
  }
  if (!v.empty()) return v;
  if (!spec.S.is_skew_symmetric()) v.push_back({"skew-symmetric", "S is not skew-symmetric"});
  for (const auto& [key, r] : spec.relations) {
    const auto [i, j] = key;
    for (const auto& [t, c] : r.terms()) {
      for (std::size_t k = 0; k < M; ++k) {
        if (k <= i && t[k] != 0) {
          v.push_back({"support", pair_name(i, j) + " involves x" + std::to_string(k + 1) +
                                      ", outside the subalgebra generated by x" +
                                      std::to_string(i + 2) + ".."});
          break;
        }
        if (k < spec.n && t[k] < 0) {
          v.push_back({"support", pair_name(i, j) + " has a negative power of x" + std::to_string(k + 1)});
          break;
        }
      }
    }
  }
  return v;
}

NcPoly scale_q(const NcPoly& a, const std::function<std::int64_t(const Exponents&)>& e) {
  return a.transform([&](const Exponents& t, const QLaurent& c) { return c.shifted(e(t)); });
}

}  // namespace

NcPoly OreAlgebraSpec::relation(std::size_t i, std::size_t j) const {
  auto it = relations.find({i, j});
  return it == relations.end() ? NcPoly() : it->second;
}

bool OreAlgebraSpec::has_derivations() const {
  for (const auto& [key, r] : relations) {
    if (!r.is_zero()) return true;
  }
  return false;
}

void OreAlgebra::Fuel::spend(std::uint64_t k) {
  if (k > left) throw FuelExhausted("normal-form rewriting ran out of fuel");
  left -= k;
}

OreAlgebra::OreAlgebra(OreAlgebraSpec spec, std::uint64_t fuel) : spec_(std::move(spec)), fuel_(fuel) {
  const auto v = structural_violations(spec_);
  if (!v.empty()) throw InvalidSpec(v.front().check + ": " + v.front().detail);
  for (auto it = spec_.relations.begin(); it != spec_.relations.end();) {
    it = it->second.is_zero() ? spec_.relations.erase(it) : std::next(it);
  }
}

std::int64_t OreAlgebra::weight(std::size_t i, const Exponents& t) const {
  const IntMatrix& w = spec_.weights();
  std::int64_t s = 0;
  for (std::size_t j = 0; j < t.size(); ++j) s += w(i, j) * t[j];
  return s;
}

bool OreAlgebra::supported_from(const NcPoly& a, std::size_t from) const {
  for (const auto& [t, c] : a.terms()) {
    for (std::size_t k = 0; k < from && k < t.size(); ++k) {
      if (t[k] != 0) return false;
    }
  }
  return true;
}

NcPoly OreAlgebra::multiply(const NcPoly& a, const NcPoly& b) const {
  Fuel fuel{fuel_};
  return mul(a, b, fuel);
}

NcPoly OreAlgebra::mul(const NcPoly& a, const NcPoly& b, Fuel& fuel) const {
  NcPoly r;
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) {
      const QLaurent c = ca * cb;
      const NcPoly prod = mono_mul(ta, tb, fuel);
      for (const auto& [t, pc] : prod.terms()) r.add_term(t, pc * c);
    }
  }
  return r;
}

NcPoly OreAlgebra::mono_mul(const Exponents& ta, const Exponents& tb, Fuel& fuel) const {
  const std::size_t M = dimension();
  std::size_t lvl = 0;
  while (lvl < M && ta[lvl] == 0 && tb[lvl] == 0) ++lvl;
  if (lvl >= spec_.n) {
    return NcPoly::monomial(core::add_exponents(ta, tb),
                            QLaurent::monomial(qtorus::cocycle(spec_.S, ta, tb)));
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = product_cache_.find({ta, tb});
    if (it != product_cache_.end()) return it->second;
  }
  const std::int64_t a1 = ta[lvl];
  const std::int64_t b1 = tb[lvl];
  Exponents a_rest = ta, b_rest = tb;
  a_rest[lvl] = 0;
  b_rest[lvl] = 0;

  // a_rest * x^{b1} = sum_k x^k F[k] with F[k] in R_{lvl+1}, using
  // c x = x tau^{-1}(c) - delta(tau^{-1}(c)).
  std::vector<NcPoly> F{NcPoly::monomial(a_rest, QLaurent(1L))};
  for (std::int64_t step = 0; step < b1; ++step) {
    std::vector<NcPoly> G(F.size() + 1);
    for (std::size_t k = 0; k < F.size(); ++k) {
      if (F[k].is_zero()) continue;
      fuel.spend(F[k].size());
      const NcPoly g = scale_q(F[k], [&](const Exponents& t) {
        std::int64_t e = 0;
        for (std::size_t j = lvl + 1; j < M; ++j) e -= spec_.S(lvl, j) * t[j];
        return e;
      });
      G[k + 1] += g;
      G[k] -= delta(lvl, g, fuel);
    }
    F = std::move(G);
  }
  NcPoly result;
  const NcPoly b_mono = NcPoly::monomial(b_rest, QLaurent(1L));
  for (std::size_t k = 0; k < F.size(); ++k) {
    if (F[k].is_zero()) continue;
    const NcPoly tail = mul(F[k], b_mono, fuel);
    for (const auto& [t, c] : tail.terms()) {
      Exponents u = t;
      u[lvl] = a1 + static_cast<std::int64_t>(k);
      result.add_term(u, c);
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  product_cache_.emplace(std::make_pair(ta, tb), result);
  return result;
}

NcPoly OreAlgebra::delta(std::size_t i, const NcPoly& a, Fuel& fuel) const {
  NcPoly r;
  for (const auto& [t, c] : a.terms()) {
    const NcPoly d_t = delta_mono(i, t, fuel);
    for (const auto& [u, d] : d_t.terms()) r.add_term(u, d * c);
  }
  return r;
}

NcPoly OreAlgebra::delta_mono(std::size_t i, const Exponents& t, Fuel& fuel) const {
  const std::size_t M = dimension();
  std::size_t j = i + 1;
  while (j < M && t[j] == 0) ++j;
  if (j >= spec_.n) return {};
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = delta_cache_.find({i, t});
    if (it != delta_cache_.end()) return it->second;
  }
  fuel.spend(1);
  const std::int64_t e = t[j];
  Exponents rest = t;
  rest[j] = 0;
  const std::int64_t s = spec_.S(i, j);
  const NcPoly r = spec_.relation(i, j);
  NcPoly result;
  if (!r.is_zero()) {
    // delta(x^e) = sum_k tau(x)^k delta(x) x^{e-1-k}
    NcPoly dxe;
    for (std::int64_t k = 0; k < e; ++k) {
      const NcPoly left = NcPoly::monomial(core::unit_exponents(M, j, k), QLaurent::monomial(k * s));
      const NcPoly right = NcPoly::monomial(core::unit_exponents(M, j, e - 1 - k), QLaurent(1L));
      dxe += mul(mul(left, r, fuel), right, fuel);
    }
    result += mul(dxe, NcPoly::monomial(rest, QLaurent(1L)), fuel);
  }
  const NcPoly d_rest = delta_mono(i, rest, fuel);
  if (!d_rest.is_zero()) {
    result += mul(NcPoly::monomial(core::unit_exponents(M, j, e), QLaurent::monomial(e * s)), d_rest, fuel);
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  delta_cache_.emplace(std::make_pair(i, t), result);
  return result;
}

NcPoly OreAlgebra::apply_tau(std::size_t i, const NcPoly& a, std::int64_t k) const {
  if (i >= dimension()) throw BadParameters("apply_tau: index out of range");
  return scale_q(a, [&](const Exponents& t) { return k * weight(i, t); });
}

NcPoly OreAlgebra::apply_delta(std::size_t i, const NcPoly& a) const {
  if (i >= spec_.n) throw BadParameters("apply_delta: x" + std::to_string(i + 1) + " is not a skew generator");
  if (!supported_from(a, i + 1)) {
    throw OutOfDomain("apply_delta: delta_" + std::to_string(i + 1) +
                      " is defined on the subalgebra generated by x" + std::to_string(i + 2) + "..");
  }
  Fuel fuel{fuel_};
  return delta(i, a, fuel);
}

NcPoly OreAlgebra::apply_delta_power(std::size_t i, const NcPoly& a, std::int64_t k) const {
  NcPoly r = a;
  for (std::int64_t s = 0; s < k && !r.is_zero(); ++s) r = apply_delta(i, r);
  return r;
}

NcPoly OreAlgebra::pi_n(const NcPoly& g, std::int64_t n, std::size_t i) const {
  if (n < 1) throw BadParameters("pi_n: n must be positive");
  NcPoly r = g;
  for (std::int64_t k = 1; k < n; ++k) r = multiply(apply_tau(i, g, k), r);
  return r;
}

std::vector<Violation> validate_spec(const OreAlgebraSpec& spec) {
  auto v = structural_violations(spec);
  if (!v.empty()) return v;
  const OreAlgebra alg(spec);
  const std::size_t M = spec.dimension();
  const IntMatrix& W = spec.weights();

  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = i + 1; j < M; ++j) {
      if (W(i, j) != spec.S(i, j)) {
        v.push_back({"weights", "W_" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    " must equal s_" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + " = " + std::to_string(spec.S(i, j))});
      }
    }
  }
  for (const auto& [key, r] : alg.spec().relations) {
    const auto [i, j] = key;
    for (const auto& [t, c] : r.terms()) {
      for (std::size_t k = 0; k < M; ++k) {
        if (alg.weight(k, t) != W(k, i) + W(k, j)) {
          v.push_back({"homogeneous", pair_name(i, j) + " monomial " + core::monomial_to_string(t) +
                                          " has tau_" + std::to_string(k + 1) + "-weight " +
                                          std::to_string(alg.weight(k, t)) + ", expected " +
                                          std::to_string(W(k, i) + W(k, j))});
          break;
        }
      }
    }
  }
  for (const auto& [key, r] : alg.spec().relations) {
    const auto [i, j] = key;
    // delta tau (x_j) = q^{s_i} tau delta (x_j)
    const NcPoly lhs = r * QLaurent::monomial(spec.S(i, j));
    const NcPoly rhs = alg.apply_tau(i, r) * QLaurent::monomial(spec.skew_constants[i]);
    if (lhs != rhs) {
      v.push_back({"q-skew", "delta_" + std::to_string(i + 1) + " tau_" + std::to_string(i + 1) +
                                 " != q^" + std::to_string(spec.skew_constants[i]) + " tau delta on x" +
                                 std::to_string(j + 1)});
    }
  }
  // delta_i must respect x_j x_k = q^{s_jk} x_k x_j + r_jk inside R_{i+1}.
  for (std::size_t i = 0; i < spec.n; ++i) {
    bool any = false;
    for (std::size_t j = i + 1; j < spec.n; ++j) any |= !spec.relation(i, j).is_zero();
    if (!any) continue;
    auto x = [&](std::size_t j) { return alg.generator(j); };
    auto tau_x = [&](std::size_t j) { return x(j) * QLaurent::monomial(spec.S(i, j)); };
    auto d = [&](std::size_t j) { return j < spec.n ? spec.relation(i, j) : NcPoly(); };
    for (std::size_t j = i + 1; j < M; ++j) {
      for (std::size_t k = j + 1; k < M; ++k) {
        try {
          NcPoly lhs = alg.multiply(d(j), x(k)) + alg.multiply(tau_x(j), d(k));
          NcPoly rhs = (alg.multiply(d(k), x(j)) + alg.multiply(tau_x(k), d(j))) *
                       QLaurent::monomial(spec.S(j, k));
          rhs += alg.apply_delta(i, spec.relation(j, k));
          if (lhs != rhs) {
            v.push_back({"derivation", "delta_" + std::to_string(i + 1) + " does not respect the relation of x" +
                                           std::to_string(j + 1) + ", x" + std::to_string(k + 1) +
                                           ": defect " + core::to_string(lhs - rhs)});
          }
        } catch (const FuelExhausted& e) {
          v.push_back({"derivation", e.what()});
        }
      }
    }
  }
  return v;
}

bool lambda_member_at(const OreAlgebra& alg, std::size_t i, Int l) {
  const auto field = scalar::CycField::get(static_cast<int>(l));
  const NcPoly xl = alg.generator(i, l);
  for (std::size_t g = 0; g < alg.dimension(); ++g) {
    if (!core::specialize(alg.commutator(xl, alg.generator(g)), field).is_zero()) return false;
  }
  return true;
}

bool lambda_member(const OreAlgebra& alg, Int l) {
  if (l <= 0) throw BadParameters("lambda_member: l must be positive");
  for (std::size_t i = 0; i < alg.num_skew(); ++i) {
    if (!lambda_member_at(alg, i, l)) return false;
  }
  return true;
}

NcPoly random_element(const core::Algebra& alg, std::uint64_t seed, int maxdeg, std::size_t min_index) {
  if (maxdeg < 0) throw BadParameters("random_element: maxdeg must be non-negative");
  static const std::vector<QLaurent> pool = [] {
    const QLaurent q = QLaurent::q(), one(1L);
    return std::vector<QLaurent>{one, -one, QLaurent(2L), QLaurent(-3L), q, -q, q.pow(-1),
                                 one + q, QLaurent(2L) - q, one + q * q};
  }();
  std::mt19937_64 rng(seed);
  const std::size_t M = alg.dimension();
  const std::size_t nterms = 1 + rng() % 4;
  NcPoly p;
  for (std::size_t k = 0; k < nterms; ++k) {
    Exponents t(M, 0);
    const std::uint64_t d = rng() % static_cast<std::uint64_t>(maxdeg + 1);
    if (min_index < M) {
      for (std::uint64_t s = 0; s < d; ++s) {
        const std::size_t idx = min_index + rng() % (M - min_index);
        t[idx] += (idx < alg.num_skew() || rng() % 2 == 0) ? 1 : -1;
      }
    }
    p += NcPoly::monomial(t, pool[rng() % pool.size()]);
  }
  return p;
}

namespace {

const NcPoly& element(const IdentityInputs& in, std::size_t k) {
  if (in.elements.size() <= k) throw BadParameters("identity check: missing input element");
  return in.elements[k];
}

void require_domain(const OreAlgebra& alg, const IdentityInputs& in, std::size_t count) {
  if (in.index >= alg.num_skew()) throw BadParameters("identity check: index is not a skew generator");
  for (std::size_t k = 0; k < count; ++k) {
    if (!alg.supported_from(element(in, k), in.index + 1)) {
      throw OutOfDomain("identity check: input must lie in the subalgebra above x" + std::to_string(in.index + 1));
    }
  }
}

void require_root_hypotheses(const OreAlgebra& alg, const IdentityInputs& in) {
  if (in.l < 1) throw UnsupportedInput("identity check: requires l >= 1");
  const Int s = alg.spec().skew_constants[in.index];
  if (s != 0 && std::gcd(s, in.l) != 1) {
    throw UnsupportedInput("gcd(s_" + std::to_string(in.index + 1) + ", l) != 1");
  }
  if (!lambda_member_at(alg, in.index, in.l)) {
    throw UnsupportedInput("x" + std::to_string(in.index + 1) + "^" + std::to_string(in.l) +
                           " is not central at eps");
  }
}

CheckResult compare(const std::string& name, const NcPoly& lhs, const NcPoly& rhs) {
  if (lhs == rhs) return {name, true, ""};
  return {name, false, "difference " + core::to_string(lhs - rhs)};
}

CheckResult compare(const std::string& name, const SpecPoly& lhs, const SpecPoly& rhs) {
  if (lhs == rhs) return {name, true, ""};
  return {name, false, "difference " + core::to_string(lhs - rhs)};
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{"power-commutation",         "leibniz-power",
                                              "nilpotent-at-root",         "divided-power-integrality",
                                              "divided-power-ideal",       "theta-delta-commutation"};
  return names;
}

CheckResult identity_check(const std::string& name, const OreAlgebra& alg, const IdentityInputs& in) {
  const std::size_t i = in.index;
  const std::int64_t s = i < alg.num_skew() ? alg.spec().skew_constants[i] : 0;
  auto tau = [&](const NcPoly& a, std::int64_t k) { return alg.apply_tau(i, a, k); };
  auto dpow = [&](const NcPoly& a, std::int64_t k) { return alg.apply_delta_power(i, a, k); };

  if (name == "power-commutation") {
    require_domain(alg, in, 1);
    const NcPoly& a = element(in, 0);
    const std::int64_t n = in.n;
    const NcPoly lhs = alg.multiply(alg.generator(i, n), a);
    NcPoly rhs;
    for (std::int64_t k = 0; k <= n; ++k) {
      const NcPoly term = alg.multiply(tau(dpow(a, k), n - k), alg.generator(i, n - k));
      rhs += term * scalar::q_binomial(n, k, s);
    }
    return compare(name, lhs, rhs);
  }
  if (name == "leibniz-power") {
    require_domain(alg, in, 2);
    const NcPoly& a = element(in, 0);
    const NcPoly& b = element(in, 1);
    const std::int64_t n = in.n;
    const NcPoly lhs = dpow(alg.multiply(a, b), n);
    NcPoly rhs;
    for (std::int64_t k = 0; k <= n; ++k) {
      rhs += alg.multiply(tau(dpow(a, k), n - k), dpow(b, n - k)) * scalar::q_binomial(n, k, s);
    }
    return compare(name, lhs, rhs);
  }
  if (name == "nilpotent-at-root") {
    require_domain(alg, in, 1);
    require_root_hypotheses(alg, in);
    const auto field = scalar::CycField::get(static_cast<int>(in.l));
    const NcPoly& a = element(in, 0);
    const SpecPoly d = core::specialize(dpow(a, in.l), field);
    if (!d.is_zero()) return {name, false, "delta^l(a) at eps = " + core::to_string(d)};
    return compare(name, core::specialize(tau(a, in.l), field), core::specialize(a, field));
  }
  if (name == "divided-power-integrality") {
    require_domain(alg, in, 1);
    require_root_hypotheses(alg, in);
    const auto field = scalar::CycField::get(static_cast<int>(in.l));
    const int need = scalar::eps_valuation(scalar::q_factorial(in.n, s), field);
    const NcPoly d = dpow(element(in, 0), in.n);
    for (const auto& [t, c] : d.terms()) {
      const int have = scalar::eps_valuation(c, field);
      if (have < need) {
        return {name, false, "coefficient of " + core::monomial_to_string(t) + " has a pole of order " +
                                 std::to_string(need - have) + " after division by (" +
                                 std::to_string(in.n) + ")!"};
      }
    }
    return {name, true, ""};
  }
  if (name == "divided-power-ideal") {
    require_domain(alg, in, 1);
    const NcPoly& a = element(in, 0);
    std::size_t j = alg.dimension();
    if (a.is_monomial() && a.terms().begin()->second == QLaurent(1L)) {
      const Exponents& t = a.terms().begin()->first;
      if (core::total_degree(t) == 1) {
        for (std::size_t k = 0; k < t.size(); ++k) {
          if (t[k] == 1) j = k;
        }
      }
    }
    if (j >= alg.num_skew()) throw UnsupportedInput("divided-power-ideal: a must be a skew generator");
    // The ideal generated by x_j is the span of monomials containing x_j
    // exactly when these relation conditions hold.
    for (std::size_t k = i + 1; k < j; ++k) {
      const NcPoly r = alg.spec().relation(k, j);
      for (const auto& [t, c] : r.terms()) {
        if (t[j] == 0) throw UnsupportedInput("divided-power-ideal: the ideal generated by a is not monomial");
      }
    }
    for (std::size_t c = j + 1; c < alg.num_skew(); ++c) {
      if (!alg.spec().relation(j, c).is_zero()) {
        throw UnsupportedInput("divided-power-ideal: the ideal generated by a is not monomial");
      }
    }
    if (in.n < 1 || in.n > in.m) throw UnsupportedInput("divided-power-ideal: requires 1 <= n <= m");
    NcPoly diff = dpow(alg.power(a, in.m), in.n);
    if (in.n == in.m) diff -= alg.pi_n(alg.apply_delta(i, a), in.n, i) * scalar::q_factorial(in.n, s);
    for (const auto& [t, c] : diff.terms()) {
      if (t[j] == 0) {
        return {name, false, "term " + core::monomial_to_string(t) + " lies outside the ideal of x" +
                                 std::to_string(j + 1)};
      }
    }
    return {name, true, ""};
  }
  if (name == "theta-delta-commutation") {
    require_domain(alg, in, 1);
    if (in.l < 1) throw UnsupportedInput("theta-delta-commutation: requires l >= 1");
    const auto field = scalar::CycField::get(static_cast<int>(in.l));
    const scalar::CycScalar unit = scalar::CycScalar(field, scalar::Rational(in.l)) *
                                   scalar::CycScalar::eps_power(field, -1);
    auto theta = [&](const SpecPoly& p) {
      return p.transform([&](const Exponents& t, const scalar::CycScalar& c) {
        return c * unit * scalar::CycScalar(alg.weight(i, t));
      });
    };
    auto delta_eps = [&](const SpecPoly& p) { return core::specialize(alg.apply_delta(i, core::lift(p)), field); };
    const SpecPoly a = core::specialize(element(in, 0), field);
    const SpecPoly da = delta_eps(a);
    return compare(name, delta_eps(theta(a)), theta(da) + da * (unit * scalar::CycScalar(s)));
  }
  throw BadParameters("identity_check: unknown identity " + name);
}

std::vector<CheckResult> ore_identity_suite(const OreAlgebra& alg, Int l, std::uint64_t seed, int maxdeg) {
  std::vector<CheckResult> out;
  auto run = [&](const std::string& name, const IdentityInputs& in) {
    const std::string label = name + "[x" + std::to_string(in.index + 1) + "]";
    try {
      CheckResult r = identity_check(name, alg, in);
      r.name = label;
      out.push_back(std::move(r));
    } catch (const UnsupportedInput&) {
      // hypotheses do not hold for this (algebra, l); nothing to check
    }
  };
  for (std::size_t i = 0; i < alg.num_skew(); ++i) {
    const NcPoly a = random_element(alg, seed * 7919 + 2 * i, maxdeg, i + 1);
    const NcPoly b = random_element(alg, seed * 7919 + 2 * i + 1, maxdeg, i + 1);
    IdentityInputs in{i, l, l, l, {a, b}};
    run("power-commutation", in);
    in.n = 1 + static_cast<std::int64_t>(seed % 4);
    run("leibniz-power", in);
    in.n = l;
    run("nilpotent-at-root", in);
    in.n = 1 + static_cast<std::int64_t>(seed % static_cast<std::uint64_t>(2 * l));
    run("divided-power-integrality", in);
    run("theta-delta-commutation", in);
    for (std::size_t j = i + 1; j < alg.num_skew(); ++j) {
      IdentityInputs gen{i, l, 1 + static_cast<std::int64_t>(seed % 3), 0, {alg.generator(j)}};
      gen.m = gen.n + static_cast<std::int64_t>(seed % 2);
      run("divided-power-ideal", gen);
    }
  }
  return out;
}

}  // namespace qsolv::orealg
