#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qsolv/core/algebra.hpp"
#include "qsolv/intlat/intmatrix.hpp"

namespace qsolv::orealg {

using core::Exponents;
using core::NcPoly;
using core::SpecPoly;
using intlat::Int;
using intlat::IntMatrix;
using intlat::IntVector;
using scalar::FieldPtr;
using scalar::QLaurent;

/// Iterated q-skew extension on x_1..x_n followed by invertible
/// x_{n+1}..x_{n+m}.  All indices are 0-based.
struct OreAlgebraSpec {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  IntMatrix S;
  /// tau_i(x_j) = q^{W_ij} x_j; an empty matrix means "use S".
  IntMatrix W;
  /// s_i with delta_i tau_i = q^{s_i} tau_i delta_i, one per skew generator.
  IntVector skew_constants;
  /// r_ij for i < j < n; absent pairs q-commute.
  std::map<std::pair<std::size_t, std::size_t>, NcPoly> relations;

  std::size_t dimension() const { return n + m; }
  const IntMatrix& weights() const { return W.rows() == 0 ? S : W; }
  NcPoly relation(std::size_t i, std::size_t j) const;
  bool has_derivations() const;
};

struct Violation {
  std::string check;
  std::string detail;
};

/// Lists every failed invariant: shapes, skew-symmetry, support of r_ij,
/// weight extension, H-homogeneity, the q-skew condition, and compatibility
/// of each delta_i with the relations of the subalgebra it acts on.
std::vector<Violation> validate_spec(const OreAlgebraSpec& spec);

class OreAlgebra : public core::Algebra {
 public:
  /// Throws InvalidSpec when the data cannot define an iterated extension
  /// (shape mismatch, S not skew-symmetric, r_ij outside R_{i+1}).
  static constexpr std::uint64_t kFuel = 1'000'000;

  explicit OreAlgebra(OreAlgebraSpec spec, std::uint64_t fuel = kFuel);

  std::size_t dimension() const override { return spec_.dimension(); }
  std::size_t num_skew() const override { return spec_.n; }
  const IntMatrix& skew_matrix() const override { return spec_.S; }
  NcPoly relation_term(std::size_t i, std::size_t j) const override { return spec_.relation(i, j); }
  /// Throws FuelExhausted after `fuel` elementary rewrites.
  NcPoly multiply(const NcPoly& a, const NcPoly& b) const override;

  const OreAlgebraSpec& spec() const { return spec_; }

  /// tau_i^k on the whole algebra via the weight matrix.
  NcPoly apply_tau(std::size_t i, const NcPoly& a, std::int64_t k = 1) const;
  /// delta_i on R_{i+1}; throws OutOfDomain when a involves x_1..x_{i+1}.
  NcPoly apply_delta(std::size_t i, const NcPoly& a) const;
  NcPoly apply_delta_power(std::size_t i, const NcPoly& a, std::int64_t k) const;
  /// tau^{n-1}(g) ... tau(g) g with tau = tau_i.
  NcPoly pi_n(const NcPoly& g, std::int64_t n, std::size_t i) const;

  /// True when every monomial of a only involves indices >= from.
  bool supported_from(const NcPoly& a, std::size_t from) const;
  /// tau_i-weight of a monomial.
  std::int64_t weight(std::size_t i, const Exponents& t) const;

 private:
  struct Fuel {
    std::uint64_t left;
    void spend(std::uint64_t k);
  };

  NcPoly mul(const NcPoly& a, const NcPoly& b, Fuel& fuel) const;
  NcPoly mono_mul(const Exponents& ta, const Exponents& tb, Fuel& fuel) const;
  NcPoly delta(std::size_t i, const NcPoly& a, Fuel& fuel) const;
  NcPoly delta_mono(std::size_t i, const Exponents& t, Fuel& fuel) const;

  OreAlgebraSpec spec_;
  std::uint64_t fuel_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<Exponents, Exponents>, NcPoly> product_cache_;
  mutable std::map<std::pair<std::size_t, Exponents>, NcPoly> delta_cache_;
};

/// For every skew generator x_i and every generator g, x_i^l g - g x_i^l
/// vanishes at q = eps.
bool lambda_member(const OreAlgebra& alg, Int l);
/// The same test for a single skew generator.
bool lambda_member_at(const OreAlgebra& alg, std::size_t i, Int l);

/// Deterministic in seed; total degree <= maxdeg; supported on indices
/// >= min_index; coefficients from a fixed pool of nonzero Laurent values.
NcPoly random_element(const core::Algebra& alg, std::uint64_t seed, int maxdeg,
                      std::size_t min_index = 0);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct IdentityInputs {
  /// The skew generator x_i whose tau_i, delta_i are used.
  std::size_t index = 0;
  Int l = 0;
  std::int64_t n = 1;
  std::int64_t m = 1;
  std::vector<NcPoly> elements;
};

/// Identity names: power-commutation, leibniz-power, nilpotent-at-root,
/// divided-power-integrality, divided-power-ideal, theta-delta-commutation.
const std::vector<std::string>& identity_names();

/// Expands both sides exactly and compares.  Throws UnsupportedInput when
/// the identity's hypotheses do not hold for the given inputs.
CheckResult identity_check(const std::string& name, const OreAlgebra& alg,
                           const IdentityInputs& inputs);

/// Runs every identity on random inputs of degree <= maxdeg for every skew
/// generator; identities whose hypotheses fail for (alg, l) are skipped.
std::vector<CheckResult> ore_identity_suite(const OreAlgebra& alg, Int l, std::uint64_t seed,
                                            int maxdeg);

}  // namespace qsolv::orealg
