#pragma once

#include <cstdint>
#include <vector>

#include "qsolv/core/algebra.hpp"
#include "qsolv/intlat/lattice.hpp"

namespace qsolv::qtorus {

using core::Exponents;
using core::NcPoly;
using intlat::Int;
using intlat::IntMatrix;
using intlat::IntVector;

/// kappa(a, b) = sum_{i < j} s_ji a_j b_i: the q-exponent produced when the
/// normal-ordered product u^a u^b is rewritten as u^{a+b}.
std::int64_t cocycle(const IntMatrix& s, const Exponents& a, const Exponents& b);

/// a^T S b, the exponent in u^a u^b = q^{a^T S b} u^b u^a.
std::int64_t pairing(const IntMatrix& s, const Exponents& a, const Exponents& b);

/// Twisted Laurent polynomial algebra on u_1..u_M with u_i u_j = q^{s_ij} u_j u_i.
class TorusAlgebra : public core::Algebra {
 public:
  explicit TorusAlgebra(IntMatrix s);

  std::size_t dimension() const override { return s_.rows(); }
  std::size_t num_skew() const override { return 0; }
  const IntMatrix& skew_matrix() const override { return s_; }
  NcPoly relation_term(std::size_t, std::size_t) const override { return {}; }
  NcPoly multiply(const NcPoly& a, const NcPoly& b) const override;

  /// Inverse of a monomial element; throws NotDivisible for anything else.
  NcPoly inverse(const NcPoly& a) const;

 private:
  IntMatrix s_;
};

/// Sublattice of Z^M stored by its Hermite basis.
struct CenterLattice {
  std::vector<IntVector> basis;
  bool at_eps = false;
  Int l = 0;

  bool contains(const IntVector& n) const;
  bool same_lattice(const CenterLattice& o) const { return basis == o.basis; }
};

CenterLattice make_lattice(const std::vector<IntVector>& generators, std::size_t dim, bool at_eps,
                           Int l);

/// Exponents of central monomials at indeterminate q: ker S.
CenterLattice center_generic(const TorusAlgebra& t);

/// Exponents of monomials central at q = eps: {n : S n = 0 mod l}.
CenterLattice center_at_eps(const TorusAlgebra& t, Int l);

inline constexpr std::size_t kBruteForceMaxDim = 4;
inline constexpr Int kBruteForceMaxOrder = 7;

/// Enumerates residues in [0, l)^M and tests commutation with every
/// generator by multiplying at q = eps.  Throws TooLarge beyond M = 4, l = 7.
CenterLattice brute_force_center(const TorusAlgebra& t, Int l);

/// B = A (x) Z(B): y_k = u^{W e_k} with y_{2k-1} y_{2k} = q^{d_k} y_{2k} y_{2k-1},
/// and z_j = u^{W e_{2r+j}} spanning the generic center.
struct TorusDecomposition {
  intlat::AlternatingForm form;
  std::vector<Exponents> y;
  std::vector<Exponents> z;
};

TorusDecomposition torus_decompose(const TorusAlgebra& t);

}  // namespace qsolv::qtorus
