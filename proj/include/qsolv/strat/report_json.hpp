#pragma once

#include <json.hpp>

#include "qsolv/orealg/ore.hpp"
#include "qsolv/qtorus/torus.hpp"
#include "qsolv/scalar/cyclotomic.hpp"
#include "qsolv/strat/stratum.hpp"

namespace qsolv::strat {

using json = nlohmann::json;

inline constexpr const char* kReportSchema = "qsolv-report/1";

/// {"l": L, "coeffs": ["c0", "c1", ...]} in the power basis of Q(eps_L).
json scalar_to_json(const scalar::CycScalar& c);

/// Accepts an integer, a rational string "p/q", an array of power-basis
/// coefficients, or the object form above.  Throws ParseError.
scalar::CycScalar scalar_from_json(const json& j, const scalar::FieldPtr& field);

json matrix_to_json(const intlat::IntMatrix& a);
json verdict_to_json(const AdmissibilityVerdict& v);
json stratum_to_json(const Stratum& s);
json record_to_json(const StratumRecord& r);
json report_to_json(const Report& r);
json checks_to_json(const std::vector<orealg::CheckResult>& checks);
json violations_to_json(const std::vector<Violation>& violations);
json lattice_to_json(const qtorus::CenterLattice& lat);

}  // namespace qsolv::strat
