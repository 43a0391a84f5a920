#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qsolv/core/algebra.hpp"
#include "qsolv/qtorus/torus.hpp"
#include "qsolv/scalar/cyc_linalg.hpp"

namespace qsolv::qrep {

using core::Algebra;
using core::NcPoly;
using core::SpecPoly;
using intlat::Int;
using intlat::IntMatrix;
using scalar::CycMatrix;
using scalar::CycScalar;
using scalar::FieldPtr;

/// Y1 = nu1 diag(1, eps^d, ..., eps^{(l-1)d}) and Y2 = nu2 (e_j -> e_{j+1 mod l}),
/// so Y1 Y2 = eps^d Y2 Y1 and Y_i^l = nu_i^l I.  Throws BadParameters
/// unless gcd(d, l) = 1.
std::pair<CycMatrix, CycMatrix> clock_shift_block(Int l, Int d, const CycScalar& nu1, const CycScalar& nu2);

/// chi(y_i^l) = nu_i^l for the 2r paired generators y_i, chi(z_j) = alpha_j
/// for the generators z_j of the generic center.
struct CentralCharacter {
  std::vector<CycScalar> nu;
  std::vector<CycScalar> alpha;
};

/// Matrices for the generators x_1..x_M of an algebra at q = eps.
struct Rep {
  Int l = 0;
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<CycMatrix> matrices;
  /// Central elements with the scalars they must act by.
  std::vector<std::pair<NcPoly, CycScalar>> central;
  std::string origin;
};

/// Tensor product of one clock/shift block per pair (y_{2k-1}, y_{2k}) with
/// z_j acting by alpha_j, transported to u_1..u_M through the alternating
/// normal form.  Dimension l^r.  Throws BadParameters when l is not coprime
/// to the elementary divisors of S or chi has the wrong shape.
Rep build_torus_irrep(const qtorus::TorusAlgebra& t, Int l, const CentralCharacter& chi);

/// The character with every nu_i and alpha_j equal to 1.
CentralCharacter trivial_character(const qtorus::TorusAlgebra& t);

/// Wraps user-supplied matrices.
Rep make_rep(Int l, std::vector<CycMatrix> matrices, std::string origin = "user");

/// rho(a) for an element in normal-ordered form; negative powers use inverses.
CycMatrix evaluate(const Rep& rep, const NcPoly& a);
CycMatrix evaluate(const Rep& rep, const SpecPoly& a);

struct RepCheck {
  bool pass = true;
  std::vector<std::string> failures;
};

/// Checks x_i x_j = eps^{s_ij} x_j x_i + r_ij at eps for every pair,
/// invertibility of the matrices of invertible generators, and every
/// recorded central value.
RepCheck verify_rep(const Algebra& alg, const Rep& rep);

inline constexpr std::size_t kMaxCommutantUnknowns = 10'000;

/// dim { X : X rho(g) = rho(g) X for all generators g }.  Throws TooLarge
/// when N^2 exceeds kMaxCommutantUnknowns.
std::size_t commutant_dimension(const Rep& rep);

/// Basis of { X : X a(g) = b(g) X for all g }.
std::vector<CycMatrix> intertwiners(const Rep& a, const Rep& b);

/// True when some intertwiner from a to b is invertible.
bool conjugate(const Rep& a, const Rep& b);

Rep direct_sum(const Rep& a, const Rep& b);

/// l^{rank(S)/2}; throws BadParameters unless l is coprime to the
/// elementary divisors of S.
std::int64_t rep_dimension_formula(const IntMatrix& s, Int l);

}  // namespace qsolv::qrep
