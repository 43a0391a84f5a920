#include "qsolv/qadjoint/adjoint.hpp"

#include <numeric>
#include <optional>
#include <random>

#include "qsolv/errors.hpp"
#include "qsolv/intlat/lattice.hpp"
#include "qsolv/scalar/qnumbers.hpp"

namespace qsolv::qadjoint {

namespace {

FieldPtr field_of(Int l) {
  if (l < 1) throw BadParameters("l must be positive");
  return scalar::CycField::get(static_cast<int>(l));
}

CycScalar eps_pow(const FieldPtr& f, std::int64_t k) { return CycScalar::eps_power(f, k); }

// l eps^{-1}, the value of (q^l - 1) / (q - eps) at eps.
CycScalar theta_unit(const FieldPtr& f, Int l) { return CycScalar(f, scalar::Rational(l)) * eps_pow(f, -1); }

std::int64_t row_weight(const IntMatrix& w, std::size_t i, const Exponents& t) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < t.size(); ++j) s += w(i, j) * t[j];
  return s;
}

NcPoly single_monomial(const NcPoly& g, const char* what) {
  if (!g.is_monomial()) throw UnsupportedInput(std::string(what) + ": generators must be single monomials");
  return g;
}

}  // namespace

SpecPoly specialize(const NcPoly& a, Int l) { return core::specialize(a, field_of(l)); }

CentralWitness certify_central(const Algebra& alg, const NcPoly& u, Int l) {
  CentralWitness w{u, l, field_of(l), {}};
  for (std::size_t g = 0; g < alg.dimension(); ++g) {
    try {
      w.certificate.push_back(core::divide_by_q_minus_eps(alg.commutator(u, alg.generator(g)), w.field));
    } catch (const NotDivisible&) {
      throw NotCentral(core::to_string(u) + " is not central at q = eps: its commutator with x" +
                       std::to_string(g + 1) + " does not vanish");
    }
  }
  return w;
}

SpecPoly quantum_adjoint(const Algebra& alg, const CentralWitness& u, const NcPoly& a) {
  return core::specialize(core::divide_by_q_minus_eps(alg.commutator(u.u, a), u.field), u.field);
}

SpecPoly quantum_adjoint(const Algebra& alg, const CentralWitness& u, const SpecPoly& a) {
  return quantum_adjoint(alg, u, core::lift(a));
}

const IntMatrix& weight_matrix(const Algebra& alg) {
  if (const auto* ore = dynamic_cast<const orealg::OreAlgebra*>(&alg)) return ore->spec().weights();
  return alg.skew_matrix();
}

SpecPoly tau_at(const Algebra& alg, std::size_t i, const SpecPoly& a, Int l) {
  const FieldPtr f = field_of(l);
  const IntMatrix& w = weight_matrix(alg);
  return a.transform([&](const Exponents& t, const CycScalar& c) { return c * eps_pow(f, row_weight(w, i, t)); });
}

SpecPoly theta(const Algebra& alg, std::size_t i, const SpecPoly& a, Int l) {
  const FieldPtr f = field_of(l);
  const CycScalar unit = theta_unit(f, l);
  const IntMatrix& w = weight_matrix(alg);
  return a.transform([&](const Exponents& t, const CycScalar& c) {
    return c * unit * CycScalar(static_cast<long>(row_weight(w, i, t)));
  });
}

SpecPoly big_delta(const orealg::OreAlgebra& alg, std::size_t i, const SpecPoly& a, Int l) {
  const FieldPtr f = field_of(l);
  const NcPoly d = alg.apply_delta_power(i, core::lift(a), l);
  return core::specialize(core::divide_by_q_minus_eps(d, f), f);
}

SpecPoly poisson_bracket(const Algebra& alg, const CentralWitness& u, const CentralWitness& v) {
  if (u.l != v.l) throw BadParameters("poisson_bracket: witnesses certified at different l");
  return quantum_adjoint(alg, u, v.u);
}

SpecPoly torus_adjoint_fast(const qtorus::TorusAlgebra& t, std::size_t i, const SpecPoly& a, Int l) {
  const FieldPtr f = field_of(l);
  const CycScalar unit = theta_unit(f, l);
  const SpecPoly ul = core::specialize(t.generator(i, l), f);
  SpecPoly out;
  for (const auto& [n, c] : a.terms()) {
    const std::int64_t sn = row_weight(t.skew_matrix(), i, n);
    if (sn == 0) continue;
    const SpecPoly prod = t.multiply_at(SpecPoly::monomial(n, c), ul, f);
    out += prod * (unit * CycScalar(static_cast<long>(sn)));
  }
  return out;
}

namespace {

// Values of a character on the twisted group algebra spanned by u^g for g
// in a list of central exponents.
class CharacterEval {
 public:
  CharacterEval(const qtorus::TorusAlgebra& t, std::vector<Exponents> exps, std::vector<CycScalar> values,
                FieldPtr field)
      : t_(t), exps_(std::move(exps)), values_(std::move(values)), field_(std::move(field)) {
    const std::size_t m = t_.dimension();
    basis_ = IntMatrix(m, exps_.size());
    for (std::size_t k = 0; k < exps_.size(); ++k) {
      for (std::size_t i = 0; i < m; ++i) basis_(i, k) = exps_[k][i];
      if (values_[k].is_zero()) throw InconsistentPoint("character value on generator " + std::to_string(k + 1) + " is zero");
    }
  }

  // chi of the ordered product prod_k (u^{g_k})^{c_k}.
  CycScalar ordered(const intlat::IntVector& c) const {
    Exponents e(t_.dimension(), 0);
    CycScalar val = CycScalar(field_, scalar::Rational(1));
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      Exponents step = exps_[k];
      CycScalar w = values_[k];
      if (c[k] < 0) {
        for (auto& x : step) x = -x;
        w = eps_pow(field_, qtorus::cocycle(t_.skew_matrix(), exps_[k], step)) / values_[k];
      }
      for (std::int64_t r = 0; r < std::abs(c[k]); ++r) {
        val = val * w * eps_pow(field_, -qtorus::cocycle(t_.skew_matrix(), e, step));
        e = core::add_exponents(e, step);
      }
    }
    return val;
  }

  std::optional<CycScalar> at(const Exponents& n) const {
    const auto c = intlat::solve_integer(basis_, n);
    if (!c) return std::nullopt;
    return ordered(*c);
  }

  void check_relations() const {
    for (const auto& k : intlat::kernel_basis(basis_)) {
      if (!ordered(k).is_one()) {
        throw InconsistentPoint("character values violate the monomial relation with coefficients " +
                                intlat::IntMatrix::from_columns({k}, k.size()).transpose().to_string());
      }
    }
  }

 private:
  const qtorus::TorusAlgebra& t_;
  std::vector<Exponents> exps_;
  std::vector<CycScalar> values_;
  FieldPtr field_;
  IntMatrix basis_;
};

}  // namespace

PoissonMatrix poisson_matrix(const qtorus::TorusAlgebra& t, const std::vector<NcPoly>& generators, Int l) {
  PoissonMatrix pm;
  pm.generators = generators;
  std::vector<CentralWitness> w;
  for (const auto& g : generators) w.push_back(certify_central(t, single_monomial(g, "poisson_matrix"), l));
  pm.brackets.assign(generators.size(), std::vector<SpecPoly>(generators.size()));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      pm.brackets[i][j] = poisson_bracket(t, w[i], w[j]);
      pm.brackets[j][i] = -pm.brackets[i][j];
    }
  }
  return pm;
}

PoissonMatrix poisson_matrix_rank(const qtorus::TorusAlgebra& t, const std::vector<NcPoly>& generators, Int l,
                                  const std::vector<CycScalar>& point) {
  if (point.size() != generators.size()) throw InconsistentPoint("point must give one value per generator");
  const FieldPtr f = field_of(l);
  PoissonMatrix pm = poisson_matrix(t, generators, l);
  pm.point = point;
  std::vector<Exponents> exps;
  std::vector<CycScalar> normalized;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& [n, c] = *generators[k].terms().begin();
    exps.push_back(n);
    const CycScalar lead = scalar::eval_at_eps(c, f);
    normalized.push_back(point[k].in_field(f) / lead);
  }
  const CharacterEval chi(t, exps, normalized, f);
  chi.check_relations();
  const std::size_t k = generators.size();
  pm.evaluated = CycMatrix(k, k, f);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      CycScalar v(f, scalar::Rational(0));
      for (const auto& [n, c] : pm.brackets[i][j].terms()) {
        const auto value = chi.at(n);
        if (!value) throw UnsupportedInput("bracket leaves the subalgebra generated by the listed generators");
        v += c * *value;
      }
      pm.evaluated(i, j) = v;
    }
  }
  pm.rank = scalar::rank(pm.evaluated);
  return pm;
}

std::vector<CycScalar> random_character(const qtorus::TorusAlgebra& t, const std::vector<NcPoly>& generators, Int l,
                                        std::uint64_t seed) {
  const FieldPtr f = field_of(l);
  std::vector<Exponents> exps;
  for (const auto& g : generators) exps.push_back(single_monomial(g, "random_character").terms().begin()->first);
  const auto basis = intlat::hnf_basis(exps, t.dimension());
  std::mt19937_64 rng(seed);
  static const std::vector<std::pair<long, long>> pool{{1, 1}, {2, 1}, {3, 1}, {-1, 1}, {-2, 1}, {1, 2}, {-3, 2}, {5, 3}};
  std::vector<CycScalar> basis_values;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const auto [p, q] = pool[rng() % pool.size()];
    basis_values.push_back(CycScalar(f, scalar::Rational(p, q)) *
                           eps_pow(f, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(l))));
  }
  const CharacterEval chi(t, basis, basis_values, f);
  std::vector<CycScalar> out;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto c = intlat::lattice_coordinates(basis, exps[k]);
    out.push_back(scalar::eval_at_eps(generators[k].terms().begin()->second, f) * chi.ordered(*c));
  }
  return out;
}

std::size_t generic_poisson_rank(const qtorus::TorusAlgebra& t, const std::vector<NcPoly>& generators, Int l,
                                 std::uint64_t seed) {
  const FieldPtr f = field_of(l);
  std::size_t best = 0;
  try {
    best = poisson_matrix_rank(t, generators, l, std::vector<CycScalar>(generators.size(), CycScalar(f, scalar::Rational(1))))
               .rank;
  } catch (const InconsistentPoint&) {
    // the all-ones assignment is not a character for these generators
  }
  for (std::uint64_t k = 0; k < 5; ++k) {
    best = std::max(best, poisson_matrix_rank(t, generators, l, random_character(t, generators, l, seed * 5 + k)).rank);
  }
  return best;
}

std::vector<NcPoly> center_generators(const qtorus::TorusAlgebra& t, Int l) {
  std::vector<NcPoly> out;
  for (const auto& b : qtorus::center_at_eps(t, l).basis) out.push_back(t.monomial(b));
  return out;
}

namespace {

const NcPoly& input(const std::vector<NcPoly>& v, std::size_t k, const char* what) {
  if (v.size() <= k) throw UnsupportedInput(std::string("property check: missing ") + what);
  return v[k];
}

CheckResult compare(const std::string& name, const SpecPoly& lhs, const SpecPoly& rhs) {
  if (lhs == rhs) return {name, true, ""};
  return {name, false, "difference " + core::to_string(lhs - rhs)};
}

std::int64_t homogeneous_weight(const Algebra& alg, std::size_t j, const NcPoly& u) {
  const IntMatrix& w = weight_matrix(alg);
  std::optional<std::int64_t> m;
  for (const auto& [t, c] : u.terms()) {
    const std::int64_t wt = row_weight(w, j, t);
    if (m && *m != wt) throw UnsupportedInput("u is not a tau-eigenvector");
    m = wt;
  }
  return m.value_or(0);
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{"adjoint-derivation", "adjoint-representative", "adjoint-product",
                                              "poisson-bracket",    "adjoint-tau-twist",      "adjoint-theta-shift",
                                              "adjoint-expansion"};
  return names;
}

CheckResult property_check(const std::string& name, const Algebra& alg, Int l, const PropertyInputs& in) {
  const FieldPtr f = field_of(l);
  auto spec = [&](const NcPoly& p) { return core::specialize(p, f); };
  auto mul = [&](const SpecPoly& a, const SpecPoly& b) { return alg.multiply_at(a, b, f); };
  auto witness = [&](std::size_t k) {
    try {
      return certify_central(alg, input(in.central, k, "central element"), l);
    } catch (const NotCentral& e) {
      throw UnsupportedInput(e.what());
    }
  };

  if (name == "adjoint-derivation") {
    const CentralWitness u = witness(0);
    const SpecPoly a = spec(input(in.elements, 0, "element")), b = spec(input(in.elements, 1, "element"));
    return compare(name, quantum_adjoint(alg, u, mul(a, b)),
                   mul(quantum_adjoint(alg, u, a), b) + mul(a, quantum_adjoint(alg, u, b)));
  }
  if (name == "adjoint-representative") {
    const CentralWitness u = witness(0);
    const NcPoly& r = input(in.elements, 1, "element");
    const NcPoly u1 = u.u + alg.multiply(alg.constant(QLaurent::q() - QLaurent(eps_pow(f, 1))), r);
    const CentralWitness w1 = certify_central(alg, u1, l);
    const SpecPoly a = spec(input(in.elements, 0, "element"));
    const SpecPoly re = spec(r);
    return compare(name, quantum_adjoint(alg, w1, a) - quantum_adjoint(alg, u, a), mul(re, a) - mul(a, re));
  }
  if (name == "adjoint-product") {
    const CentralWitness u = witness(0), v = witness(1);
    const CentralWitness uv = certify_central(alg, alg.multiply(u.u, v.u), l);
    const SpecPoly a = spec(input(in.elements, 0, "element"));
    return compare(name, quantum_adjoint(alg, uv, a),
                   mul(quantum_adjoint(alg, u, a), spec(v.u)) + mul(spec(u.u), quantum_adjoint(alg, v, a)));
  }
  if (name == "poisson-bracket") {
    const CentralWitness u = witness(0), v = witness(1);
    const SpecPoly uv = poisson_bracket(alg, u, v);
    CheckResult r = compare(name, uv, -poisson_bracket(alg, v, u));
    if (!r.pass) return {name, false, "antisymmetry: " + r.detail};
    try {
      certify_central(alg, core::lift(uv), l);
    } catch (const NotCentral& e) {
      return {name, false, std::string("bracket is not central: ") + e.what()};
    }
    if (in.central.size() >= 3) {
      const CentralWitness w = witness(2);
      auto br = [&](const CentralWitness& x, const CentralWitness& y) {
        return certify_central(alg, core::lift(poisson_bracket(alg, x, y)), l);
      };
      const SpecPoly jac = poisson_bracket(alg, u, br(v, w)) + poisson_bracket(alg, v, br(w, u)) +
                           poisson_bracket(alg, w, br(u, v));
      if (!jac.is_zero()) return {name, false, "Jacobi identity fails: " + core::to_string(jac)};
      const CentralWitness vw = certify_central(alg, alg.multiply(v.u, w.u), l);
      r = compare(name, poisson_bracket(alg, u, vw),
                  mul(poisson_bracket(alg, u, v), spec(w.u)) + mul(spec(v.u), poisson_bracket(alg, u, w)));
      if (!r.pass) return {name, false, "Leibniz rule: " + r.detail};
    }
    return {name, true, ""};
  }
  if (name == "adjoint-tau-twist" || name == "adjoint-theta-shift") {
    if (in.index >= alg.dimension()) throw UnsupportedInput("property check: index out of range");
    const CentralWitness u = witness(0);
    const std::int64_t m = homogeneous_weight(alg, in.index, u.u);
    const SpecPoly a = spec(input(in.elements, 0, "element"));
    const SpecPoly da = quantum_adjoint(alg, u, a);
    if (name == "adjoint-tau-twist") {
      return compare(name, tau_at(alg, in.index, da, l),
                     quantum_adjoint(alg, u, tau_at(alg, in.index, a, l)) * eps_pow(f, m));
    }
    const CycScalar m_bar = theta_unit(f, l) * CycScalar(static_cast<long>(m));
    return compare(name, theta(alg, in.index, da, l),
                   quantum_adjoint(alg, u, theta(alg, in.index, a, l)) + da * m_bar);
  }
  if (name == "adjoint-expansion") {
    const auto* ore = dynamic_cast<const orealg::OreAlgebra*>(&alg);
    if (ore == nullptr) throw UnsupportedInput("adjoint-expansion: requires an Ore algebra");
    const std::size_t i = in.index;
    if (i >= ore->num_skew()) throw UnsupportedInput("adjoint-expansion: index is not a skew generator");
    const std::int64_t s = ore->spec().skew_constants[i];
    if (s != 0 && std::gcd(s, l) != 1) throw UnsupportedInput("adjoint-expansion: gcd(s, l) != 1");
    if (!orealg::lambda_member_at(*ore, i, l)) throw UnsupportedInput("adjoint-expansion: x^l is not central");
    const NcPoly& a = input(in.elements, 0, "element");
    if (!ore->supported_from(a, i + 1)) throw UnsupportedInput("adjoint-expansion: a must lie in R_{i+1}");
    const CentralWitness u = certify_central(alg, ore->generator(i, l), l);
    const SpecPoly ae = spec(a);
    SpecPoly rhs = mul(theta(alg, i, ae, l), spec(ore->generator(i, l))) + big_delta(*ore, i, ae, l);
    for (Int k = 1; k < l; ++k) {
      const NcPoly term = ore->multiply(ore->apply_tau(i, ore->apply_delta_power(i, a, k), l - k),
                                        ore->generator(i, l - k));
      try {
        rhs += spec(core::divide_by_q_minus_eps(term * scalar::q_binomial(l, k, s), f));
      } catch (const NotDivisible&) {
        throw UnsupportedInput("adjoint-expansion: middle terms are not divisible by (q - eps)");
      }
    }
    return compare(name, quantum_adjoint(alg, u, ae), rhs);
  }
  throw BadParameters("property_check: unknown property " + name);
}

std::vector<CheckResult> adjoint_property_suite(const Algebra& alg, Int l, std::uint64_t seed, int maxdeg) {
  std::vector<CheckResult> out;
  std::vector<NcPoly> central;
  for (std::size_t g = 0; g < alg.dimension(); ++g) {
    const NcPoly u = alg.generator(g, l);
    try {
      certify_central(alg, u, l);
      central.push_back(u);
    } catch (const NotCentral&) {
    }
  }
  auto run = [&](const std::string& name, const std::string& label, const PropertyInputs& in) {
    try {
      CheckResult r = property_check(name, alg, l, in);
      r.name = name + label;
      out.push_back(std::move(r));
    } catch (const UnsupportedInput&) {
      // hypotheses do not hold for these inputs
    }
  };
  const NcPoly a = orealg::random_element(alg, seed * 7919 + 101, maxdeg);
  const NcPoly b = orealg::random_element(alg, seed * 7919 + 102, maxdeg);
  const NcPoly r = orealg::random_element(alg, seed * 7919 + 103, maxdeg);
  for (std::size_t k = 0; k < central.size(); ++k) {
    const std::string lab = "[u" + std::to_string(k + 1) + "]";
    const NcPoly& v = central[(k + 1) % central.size()];
    run("adjoint-derivation", lab, {{central[k]}, {a, b}, 0});
    run("adjoint-representative", lab, {{central[k]}, {a, r}, 0});
    run("adjoint-product", lab, {{central[k], v}, {a}, 0});
    run("poisson-bracket", lab, {{central[k], v, alg.multiply(central[k], v)}, {}, 0});
    for (std::size_t j = 0; j < alg.dimension(); ++j) {
      const std::string lj = lab + "[tau" + std::to_string(j + 1) + "]";
      run("adjoint-tau-twist", lj, {{central[k]}, {a}, j});
      run("adjoint-theta-shift", lj, {{central[k]}, {a}, j});
    }
  }
  for (std::size_t i = 0; i < alg.num_skew(); ++i) {
    const NcPoly ai = orealg::random_element(alg, seed * 7919 + 200 + i, maxdeg, i + 1);
    run("adjoint-expansion", "[x" + std::to_string(i + 1) + "]", {{}, {ai}, i});
  }
  return out;
}

}  // namespace qsolv::qadjoint
