#include "qsolv/qrep/rep.hpp"

#include <map>
#include <numeric>

#include "qsolv/errors.hpp"
#include "qsolv/intlat/lattice.hpp"

namespace qsolv::qrep {

namespace {

FieldPtr field_of(Int l) {
  if (l < 1) throw BadParameters("l must be positive");
  return scalar::CycField::get(static_cast<int>(l));
}

CycScalar eps_pow(const FieldPtr& f, std::int64_t k) { return CycScalar::eps_power(f, k); }

std::string gen_name(std::size_t i) { return "x" + std::to_string(i + 1); }

// prod_k (u^{w_k})^{c_k} in order; a single monomial q^sigma u^{sum c_k w_k}.
NcPoly ordered_product(const qtorus::TorusAlgebra& t, const std::vector<core::Exponents>& w,
                       const intlat::IntVector& c) {
  NcPoly prod = t.one();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    NcPoly base = t.monomial(w[k]);
    if (c[k] < 0) base = t.inverse(base);
    prod = t.multiply(prod, t.power(base, std::abs(c[k])));
  }
  return prod;
}

}  // namespace

std::pair<CycMatrix, CycMatrix> clock_shift_block(Int l, Int d, const CycScalar& nu1, const CycScalar& nu2) {
  if (l < 1 || std::gcd(d, l) != 1) {
    throw BadParameters("clock_shift_block: requires gcd(d, l) = 1, got d = " + std::to_string(d) +
                        ", l = " + std::to_string(l));
  }
  const FieldPtr f = field_of(l);
  const auto n = static_cast<std::size_t>(l);
  CycMatrix clock(n, n, f), shift(n, n, f);
  for (std::size_t j = 0; j < n; ++j) {
    clock(j, j) = nu1.in_field(f) * eps_pow(f, static_cast<std::int64_t>(j) * d);
    shift((j + 1) % n, j) = nu2.in_field(f);
  }
  return {clock, shift};
}

CentralCharacter trivial_character(const qtorus::TorusAlgebra& t) {
  const auto form = intlat::alternating_normal_form(t.skew_matrix());
  return CentralCharacter{std::vector<CycScalar>(2 * form.r(), CycScalar(1L)),
                          std::vector<CycScalar>(form.t, CycScalar(1L))};
}

Rep build_torus_irrep(const qtorus::TorusAlgebra& t, Int l, const CentralCharacter& chi) {
  const FieldPtr f = field_of(l);
  const IntMatrix& s = t.skew_matrix();
  if (!intlat::coprime_to_elementary_divisors(s, l)) {
    throw BadParameters("build_torus_irrep: l = " + std::to_string(l) +
                        " is not coprime to the elementary divisors of S");
  }
  const qtorus::TorusDecomposition dec = qtorus::torus_decompose(t);
  const std::size_t r = dec.form.r();
  const std::size_t m = t.dimension();
  if (chi.nu.size() != 2 * r || chi.alpha.size() != dec.z.size()) {
    throw BadParameters("build_torus_irrep: character needs " + std::to_string(2 * r) + " root values and " +
                        std::to_string(dec.z.size()) + " central values");
  }
  for (const auto& v : chi.nu) {
    if (v.is_zero()) throw BadParameters("build_torus_irrep: character values must be nonzero");
  }
  for (const auto& v : chi.alpha) {
    if (v.is_zero()) throw BadParameters("build_torus_irrep: character values must be nonzero");
  }

  std::size_t dim = 1;
  for (std::size_t k = 0; k < r; ++k) dim *= static_cast<std::size_t>(l);
  // Matrices of y_1..y_{2r}, z_1..z_t.
  std::vector<CycMatrix> y;
  std::size_t before = 1;
  for (std::size_t k = 0; k < r; ++k) {
    const auto [c, sh] = clock_shift_block(l, dec.form.d[k], chi.nu[2 * k], chi.nu[2 * k + 1]);
    const std::size_t after = dim / (before * static_cast<std::size_t>(l));
    const CycMatrix left = CycMatrix::identity(before, f), right = CycMatrix::identity(after, f);
    y.push_back(scalar::kronecker(scalar::kronecker(left, c), right));
    y.push_back(scalar::kronecker(scalar::kronecker(left, sh), right));
    before *= static_cast<std::size_t>(l);
  }
  for (const auto& a : chi.alpha) y.push_back(CycMatrix::scalar(dim, a.in_field(f)));

  std::vector<core::Exponents> w;
  for (std::size_t k = 0; k < m; ++k) w.push_back(dec.form.W.column(k));
  const IntMatrix winv = intlat::unimodular_inverse(dec.form.W);

  Rep rep;
  rep.l = l;
  rep.field = f;
  rep.dim = dim;
  rep.origin = "torus irrep";
  for (std::size_t i = 0; i < m; ++i) {
    const intlat::IntVector c = winv * core::unit_exponents(m, i, 1);
    // prod_k (u^{w_k})^{c_k} = q^sigma u_i
    const NcPoly prod = ordered_product(t, w, c);
    const scalar::QLaurent& coeff = prod.terms().begin()->second;
    CycMatrix mat = CycMatrix::identity(dim, f);
    for (std::size_t k = 0; k < m; ++k) {
      if (c[k] != 0) mat = mat * y[k].pow(c[k]);
    }
    rep.matrices.push_back(mat * eps_pow(f, -coeff.min_exponent()) * coeff.terms().begin()->second.inverse());
  }
  for (std::size_t k = 0; k < 2 * r; ++k) {
    rep.central.emplace_back(t.power(t.monomial(w[k]), l), chi.nu[k].in_field(f).pow(l));
  }
  for (std::size_t j = 0; j < dec.z.size(); ++j) rep.central.emplace_back(t.monomial(dec.z[j]), chi.alpha[j].in_field(f));
  return rep;
}

Rep make_rep(Int l, std::vector<CycMatrix> matrices, std::string origin) {
  const FieldPtr f = field_of(l);
  Rep rep;
  rep.l = l;
  rep.field = f;
  rep.dim = matrices.empty() ? 0 : matrices.front().rows();
  for (auto& m : matrices) {
    if (m.rows() != rep.dim || m.cols() != rep.dim) throw BadParameters("make_rep: matrices must be square of equal size");
    CycMatrix g(rep.dim, rep.dim, f);
    for (std::size_t i = 0; i < rep.dim; ++i) {
      for (std::size_t j = 0; j < rep.dim; ++j) g(i, j) = m(i, j).in_field(f);
    }
    rep.matrices.push_back(std::move(g));
  }
  rep.origin = std::move(origin);
  return rep;
}

CycMatrix evaluate(const Rep& rep, const SpecPoly& a) {
  CycMatrix out(rep.dim, rep.dim, rep.field);
  for (const auto& [t, c] : a.terms()) {
    if (t.size() != rep.matrices.size()) throw BadParameters("evaluate: element has the wrong number of generators");
    CycMatrix term = CycMatrix::identity(rep.dim, rep.field);
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (t[k] != 0) term = term * rep.matrices[k].pow(t[k]);
    }
    out += term * c.in_field(rep.field);
  }
  return out;
}

CycMatrix evaluate(const Rep& rep, const NcPoly& a) { return evaluate(rep, core::specialize(a, rep.field)); }

RepCheck verify_rep(const Algebra& alg, const Rep& rep) {
  RepCheck out;
  auto fail = [&](std::string msg) {
    out.pass = false;
    out.failures.push_back(std::move(msg));
  };
  const std::size_t m = alg.dimension();
  if (rep.matrices.size() != m) {
    fail("expected " + std::to_string(m) + " matrices, got " + std::to_string(rep.matrices.size()));
    return out;
  }
  for (std::size_t i = alg.num_skew(); i < m; ++i) {
    if (scalar::determinant(rep.matrices[i]).is_zero()) fail(gen_name(i) + " is invertible but its matrix is singular");
  }
  if (!out.pass) return out;
  const IntMatrix& s = alg.skew_matrix();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const CycMatrix& a = rep.matrices[i];
      const CycMatrix& b = rep.matrices[j];
      const CycMatrix defect = a * b - b * a * eps_pow(rep.field, s(i, j)) - evaluate(rep, alg.relation_term(i, j));
      if (!defect.is_zero()) {
        std::string rel = gen_name(i) + "*" + gen_name(j) + " = q^" + std::to_string(s(i, j)) + " " + gen_name(j) +
                          "*" + gen_name(i);
        const NcPoly r = alg.relation_term(i, j);
        if (!r.is_zero()) rel += " + (" + core::to_string(r) + ")";
        fail("relation " + rel + " fails");
      }
    }
  }
  for (const auto& [z, value] : rep.central) {
    if (evaluate(rep, z) != CycMatrix::scalar(rep.dim, value.in_field(rep.field))) {
      fail("central element " + core::to_string(z) + " does not act by " + value.to_string());
    }
  }
  return out;
}

namespace {

// Rows of X a(g) - b(g) X = 0 with X flattened row-major.
std::vector<std::map<std::size_t, CycScalar>> intertwiner_equations(const Rep& a, const Rep& b) {
  const std::size_t n = b.dim, k = a.dim;
  std::vector<std::map<std::size_t, CycScalar>> rows;
  for (std::size_t g = 0; g < a.matrices.size(); ++g) {
    const CycMatrix& A = a.matrices[g];
    const CycMatrix& B = b.matrices[g];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        std::map<std::size_t, CycScalar> row;
        auto add = [&](std::size_t idx, const CycScalar& v) {
          if (v.is_zero()) return;
          auto [it, inserted] = row.try_emplace(idx, v);
          if (!inserted) it->second += v;
        };
        for (std::size_t p = 0; p < k; ++p) add(i * k + p, A(p, j));
        for (std::size_t p = 0; p < n; ++p) add(p * k + j, -B(i, p));
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace

std::size_t commutant_dimension(const Rep& rep) {
  const std::size_t unknowns = rep.dim * rep.dim;
  if (unknowns > kMaxCommutantUnknowns) {
    throw TooLarge("commutant_dimension: " + std::to_string(unknowns) + " unknowns exceed the limit of " +
                   std::to_string(kMaxCommutantUnknowns));
  }
  scalar::SparseEchelon ech;
  for (auto& row : intertwiner_equations(rep, rep)) {
    ech.add_row(std::move(row));
    if (ech.rank() + 1 == unknowns) break;
  }
  return unknowns - ech.rank();
}

std::vector<CycMatrix> intertwiners(const Rep& a, const Rep& b) {
  if (a.matrices.size() != b.matrices.size()) throw BadParameters("intertwiners: different generator counts");
  const std::size_t unknowns = a.dim * b.dim;
  if (unknowns > kMaxCommutantUnknowns) throw TooLarge("intertwiners: too many unknowns");
  const auto rows = intertwiner_equations(a, b);
  CycMatrix sys(rows.size(), unknowns, a.field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) sys(r, c) = v;
  }
  std::vector<CycMatrix> out;
  for (const auto& v : scalar::nullspace(sys)) {
    CycMatrix x(b.dim, a.dim, a.field);
    for (std::size_t i = 0; i < b.dim; ++i) {
      for (std::size_t j = 0; j < a.dim; ++j) x(i, j) = v[i * a.dim + j];
    }
    out.push_back(std::move(x));
  }
  return out;
}

bool conjugate(const Rep& a, const Rep& b) {
  if (a.dim != b.dim) return false;
  const auto basis = intertwiners(a, b);
  if (basis.empty()) return false;
  // A generic combination is invertible whenever some intertwiner is.
  for (long shift = 1; shift <= static_cast<long>(basis.size()) + 1; ++shift) {
    CycMatrix x(a.dim, a.dim, a.field);
    long c = shift;
    for (const auto& bm : basis) {
      x += bm * CycScalar(a.field, scalar::Rational(c));
      c = c * 3 + 1;
    }
    if (!scalar::determinant(x).is_zero()) return true;
  }
  return false;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  if (a.matrices.size() != b.matrices.size() || a.l != b.l) throw BadParameters("direct_sum: incompatible reps");
  Rep out;
  out.l = a.l;
  out.field = a.field;
  out.dim = a.dim + b.dim;
  out.origin = "direct sum";
  for (std::size_t g = 0; g < a.matrices.size(); ++g) {
    CycMatrix m(out.dim, out.dim, a.field);
    for (std::size_t i = 0; i < a.dim; ++i) {
      for (std::size_t j = 0; j < a.dim; ++j) m(i, j) = a.matrices[g](i, j);
    }
    for (std::size_t i = 0; i < b.dim; ++i) {
      for (std::size_t j = 0; j < b.dim; ++j) m(a.dim + i, a.dim + j) = b.matrices[g](i, j);
    }
    out.matrices.push_back(std::move(m));
  }
  for (const auto& c : a.central) {
    for (const auto& d : b.central) {
      if (c.first == d.first && c.second == d.second) out.central.push_back(c);
    }
  }
  return out;
}

std::int64_t rep_dimension_formula(const IntMatrix& s, Int l) {
  if (l < 1) throw BadParameters("rep_dimension_formula: l must be positive");
  if (!s.is_skew_symmetric()) throw BadParameters("rep_dimension_formula: S is not skew-symmetric");
  if (!intlat::coprime_to_elementary_divisors(s, l)) {
    throw BadParameters("rep_dimension_formula: l = " + std::to_string(l) +
                        " is not coprime to the elementary divisors of S");
  }
  std::int64_t d = 1;
  for (std::size_t k = 0; k < intlat::rank(s) / 2; ++k) d = intlat::checked_mul(d, l);
  return d;
}

}  // namespace qsolv::qrep
