#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsolv/core/algebra.hpp"
#include "qsolv/orealg/ore.hpp"
#include "qsolv/qtorus/torus.hpp"
#include "qsolv/scalar/cyc_linalg.hpp"

namespace qsolv::qadjoint {

using core::Algebra;
using core::Exponents;
using core::NcPoly;
using core::SpecPoly;
using intlat::Int;
using intlat::IntMatrix;
using orealg::CheckResult;
using scalar::CycMatrix;
using scalar::CycScalar;
using scalar::FieldPtr;
using scalar::QLaurent;

/// Coefficientwise q -> eps.
SpecPoly specialize(const NcPoly& a, Int l);

/// An element u whose image at q = eps is central.  certificate[g] holds
/// (u x_g - x_g u) / (q - eps) for every generator x_g.
struct CentralWitness {
  NcPoly u;
  Int l = 0;
  FieldPtr field;
  std::vector<NcPoly> certificate;
};

/// Throws NotCentral when some commutator is not divisible by (q - eps).
CentralWitness certify_central(const Algebra& alg, const NcPoly& u, Int l);

/// D_u(a) = ((u a' - a' u) / (q - eps)) at eps for any preimage a' of a.
SpecPoly quantum_adjoint(const Algebra& alg, const CentralWitness& u, const SpecPoly& a);
SpecPoly quantum_adjoint(const Algebra& alg, const CentralWitness& u, const NcPoly& a);

/// tau_i-weights of monomials: the weight matrix of an Ore algebra, S for a torus.
const IntMatrix& weight_matrix(const Algebra& alg);

/// tau_i at q = eps.
SpecPoly tau_at(const Algebra& alg, std::size_t i, const SpecPoly& a, Int l);
/// theta_i = (tau_i^l - id) / (q - eps): multiplies a monomial of weight w
/// by w l eps^{-1}.
SpecPoly theta(const Algebra& alg, std::size_t i, const SpecPoly& a, Int l);
/// Delta_i = delta_i^l / (q - eps) at eps on R_{i+1}; throws NotDivisible.
SpecPoly big_delta(const orealg::OreAlgebra& alg, std::size_t i, const SpecPoly& a, Int l);

/// {u, v} = D_u(v at eps).
SpecPoly poisson_bracket(const Algebra& alg, const CentralWitness& u, const CentralWitness& v);

/// D_{u_i^l}(a) on a torus from the closed formula
/// D(u^n) = l (S n)_i eps^{-1} (u^n u_i^l) at eps.
SpecPoly torus_adjoint_fast(const qtorus::TorusAlgebra& t, std::size_t i, const SpecPoly& a, Int l);

/// Brackets of central torus monomials a_1..a_k, optionally evaluated at a
/// character given by its values on the a_i.
struct PoissonMatrix {
  std::vector<NcPoly> generators;
  std::vector<std::vector<SpecPoly>> brackets;
  std::vector<CycScalar> point;
  CycMatrix evaluated;
  std::size_t rank = 0;
};

/// Symbolic bracket matrix of the listed generators (each a single torus
/// monomial, certified central at eps).
PoissonMatrix poisson_matrix(const qtorus::TorusAlgebra& t, const std::vector<NcPoly>& generators, Int l);

/// Evaluates the bracket matrix at a character and returns its exact rank.
/// Throws InconsistentPoint when a value is zero or the values violate a
/// monomial relation among the generators.
PoissonMatrix poisson_matrix_rank(const qtorus::TorusAlgebra& t, const std::vector<NcPoly>& generators,
                                  Int l, const std::vector<CycScalar>& point);

/// A character with random nonzero values on a basis of the exponent
/// lattice of the generators, extended multiplicatively.
std::vector<CycScalar> random_character(const qtorus::TorusAlgebra& t, const std::vector<NcPoly>& generators,
                                        Int l, std::uint64_t seed);

/// Maximum rank over the all-ones character and five random characters.
std::size_t generic_poisson_rank(const qtorus::TorusAlgebra& t, const std::vector<NcPoly>& generators, Int l,
                                 std::uint64_t seed = 0);

/// Monomials u^b for a basis b of the lattice of exponents central at eps.
std::vector<NcPoly> center_generators(const qtorus::TorusAlgebra& t, Int l);

struct PropertyInputs {
  std::vector<NcPoly> central;
  std::vector<NcPoly> elements;
  /// Index of the generator whose tau, theta, delta are used.
  std::size_t index = 0;
};

/// Property names: adjoint-derivation, adjoint-representative,
/// adjoint-product, poisson-bracket, adjoint-tau-twist, adjoint-theta-shift,
/// adjoint-expansion.
const std::vector<std::string>& property_names();

/// Verifies one property exactly.  Throws UnsupportedInput when its
/// hypotheses fail (missing inputs, u not a tau-eigenvector, x_i^l not
/// central, ...).
CheckResult property_check(const std::string& name, const Algebra& alg, Int l, const PropertyInputs& inputs);

/// Runs every property with u ranging over the l-th powers of the
/// generators that are central at eps and random elements of degree <= maxdeg.
std::vector<CheckResult> adjoint_property_suite(const Algebra& alg, Int l, std::uint64_t seed, int maxdeg);

}  // namespace qsolv::qadjoint
