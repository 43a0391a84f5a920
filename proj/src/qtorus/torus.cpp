#include "qsolv/qtorus/torus.hpp"

#include "qsolv/errors.hpp"

namespace qsolv::qtorus {

std::int64_t cocycle(const IntMatrix& s, const Exponents& a, const Exponents& b) {
  std::int64_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] == 0) continue;
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[j] != 0) k = intlat::checked_add(k, intlat::checked_mul(s(j, i), a[j] * b[i]));
    }
  }
  return k;
}

std::int64_t pairing(const IntMatrix& s, const Exponents& a, const Exponents& b) {
  std::int64_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      k = intlat::checked_add(k, intlat::checked_mul(a[i] * b[j], s(i, j)));
    }
  }
  return k;
}

TorusAlgebra::TorusAlgebra(IntMatrix s) : s_(std::move(s)) {
  if (!s_.is_skew_symmetric()) throw BadParameters("TorusAlgebra: matrix is not skew-symmetric");
}

NcPoly TorusAlgebra::multiply(const NcPoly& a, const NcPoly& b) const {
  NcPoly r;
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) {
      r.add_term(core::add_exponents(ta, tb), (ca * cb).shifted(cocycle(s_, ta, tb)));
    }
  }
  return r;
}

NcPoly TorusAlgebra::inverse(const NcPoly& a) const {
  if (!a.is_monomial() || !a.terms().begin()->second.is_monomial()) {
    throw NotDivisible("TorusAlgebra::inverse: only monomials are invertible");
  }
  const auto& [t, c] = *a.terms().begin();
  Exponents neg = t;
  for (auto& e : neg) e = -e;
  // u^t u^{-t} = q^{kappa(t,-t)}
  return NcPoly::monomial(neg, c.pow(-1).shifted(-cocycle(s_, t, neg)));
}

bool CenterLattice::contains(const IntVector& n) const {
  return intlat::lattice_coordinates(basis, n).has_value();
}

CenterLattice make_lattice(const std::vector<IntVector>& generators, std::size_t dim, bool at_eps,
                           Int l) {
  return CenterLattice{intlat::hnf_basis(generators, dim), at_eps, l};
}

CenterLattice center_generic(const TorusAlgebra& t) {
  return make_lattice(intlat::kernel_basis(t.skew_matrix()), t.dimension(), false, 0);
}

CenterLattice center_at_eps(const TorusAlgebra& t, Int l) {
  if (l <= 0) throw BadParameters("center_at_eps: l must be positive");
  const std::size_t m = t.dimension();
  // {n : S n = l w for some w} is the projection of ker [S | -l I].
  IntMatrix sys(m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) sys(i, j) = t.skew_matrix()(i, j);
    sys(i, m + i) = -l;
  }
  std::vector<IntVector> gens;
  for (const auto& k : intlat::kernel_basis(sys)) gens.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(m));
  return make_lattice(gens, m, true, l);
}

CenterLattice brute_force_center(const TorusAlgebra& t, Int l) {
  const std::size_t m = t.dimension();
  if (m > kBruteForceMaxDim || l > kBruteForceMaxOrder) {
    throw TooLarge("brute_force_center: limited to M <= 4 and l <= 7");
  }
  if (l <= 0) throw BadParameters("brute_force_center: l must be positive");
  const auto field = scalar::CycField::get(static_cast<int>(l));
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < m; ++i) gens.push_back(core::unit_exponents(m, i, l));
  IntVector n(m, 0);
  for (;;) {
    const NcPoly mono = t.monomial(n);
    bool central = true;
    for (std::size_t i = 0; i < m && central; ++i) {
      central = core::specialize(t.commutator(mono, t.generator(i)), field).is_zero();
    }
    if (central) gens.push_back(n);
    std::size_t k = 0;
    while (k < m && n[k] == l - 1) n[k++] = 0;
    if (k == m) break;
    ++n[k];
  }
  return make_lattice(gens, m, true, l);
}

TorusDecomposition torus_decompose(const TorusAlgebra& t) {
  TorusDecomposition dec{intlat::alternating_normal_form(t.skew_matrix()), {}, {}};
  const std::size_t r2 = 2 * dec.form.r();
  for (std::size_t k = 0; k < t.dimension(); ++k) {
    (k < r2 ? dec.y : dec.z).push_back(dec.form.W.column(k));
  }
  return dec;
}

}  // namespace qsolv::qtorus
