#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsolv/intlat/lattice.hpp"
#include "qsolv/orealg/ore.hpp"
#include "qsolv/qtorus/torus.hpp"
#include "qsolv/strat/algebra_file.hpp"

namespace qsolv::strat {

using intlat::Int;
using intlat::IntMatrix;
using orealg::OreAlgebra;
using orealg::OreAlgebraSpec;
using orealg::Violation;

/// A quotient-localization of the algebra that is a quantum torus.
struct Stratum {
  std::string label;
  /// One character per skew generator: '1' when it vanishes, '0' otherwise.
  std::string mu;
  /// Indices of the vanishing generators (empty for non-monomial ideals).
  std::vector<std::size_t> vanishing;
  /// Generator indices that survive, in order (q-commuting case).
  std::vector<std::size_t> surviving;
  std::vector<std::string> torus_names;
  /// Torus generators as elements of the original algebra.
  std::vector<NcPoly> torus_elements;
  IntMatrix s_mu;
  qtorus::TorusAlgebra torus{IntMatrix{}};
};

/// One stratum per subset of {x_1..x_n}, smallest subsets first.  Throws
/// NotQCommuting when some r_ij is nonzero and TooLarge beyond n = 16.
std::vector<Stratum> enumerate_strata_qcommuting(const OreAlgebraSpec& spec);

struct StratumValidation {
  std::optional<Stratum> stratum;
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks that the vanishing elements are H-weight vectors generating a
/// proper ideal the quotient can be computed in, that the inverted elements
/// are nonzero H-weight vectors that pairwise q-commute there, and that
/// their leading exponents are independent and as many as the surviving
/// generators.  Violations are collected, never thrown.
StratumValidation validate_user_stratum(const OreAlgebra& alg, const StratumDeclaration& decl);

struct Clause {
  enum class Status { Pass, Fail, Assumed };
  std::string id;
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

std::string to_string(Clause::Status s);

struct AdmissibilityVerdict {
  Int l = 0;
  bool admissible = false;
  std::vector<Clause> clauses;
  std::optional<intlat::MinorWitness> witness;
};

/// (a) every x_i^l is central at eps, (b) l is coprime to every minor of S,
/// (c) gcd(l, s_i) = 1 for each generator with a nonzero derivation, and
/// (d) good reduction, reported as assumed.  Throws BadParameters for l < 2.
AdmissibilityVerdict admissible(const OreAlgebraSpec& spec, Int l);

struct RepSummary {
  std::size_t dim = 0;
  bool verified = false;
  std::vector<std::string> failures;
  std::optional<std::size_t> commutant;
};

struct StratumRecord {
  Stratum stratum;
  std::size_t rank = 0;
  std::size_t leaf_dimension = 0;
  bool admissible = false;
  std::string admissibility_detail;
  std::optional<std::int64_t> rep_dimension;
  /// Rank of the Poisson matrix at generic characters of the stratum torus.
  std::optional<std::size_t> poisson_rank;
  std::optional<RepSummary> rep;
  /// rank is even, leaf dimension and Poisson rank agree with it, and
  /// rep_dimension = l^{rank/2}.
  bool consistent = true;
  std::vector<std::string> inconsistencies;
};

struct Report {
  std::string algebra;
  Int l = 0;
  AdmissibilityVerdict verdict;
  std::vector<StratumRecord> strata;
  /// Every record consistent and every built representation verified.
  bool pass() const;
};

struct ReportOptions {
  bool build_reps = false;
  std::uint64_t seed = 0;
};

Report stratum_report(const OreAlgebraSpec& spec, Int l, const std::vector<Stratum>& strata,
                      const ReportOptions& options = {});

}  // namespace qsolv::strat
