#include "qsolv/strat/report_json.hpp"

#include "qsolv/errors.hpp"

namespace qsolv::strat {

using scalar::CycScalar;
using scalar::FieldPtr;
using scalar::Rational;

json scalar_to_json(const CycScalar& c) {
  json coeffs = json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(r.get_str());
  return {{"l", c.order()}, {"coeffs", coeffs}};
}

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational r;
    if (r.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not a rational number: " + j.dump());
    r.canonicalize();
    if (r.get_den() == 0) throw ParseError("zero denominator: " + j.dump());
    return r;
  }
  throw ParseError("expected an integer or a rational string, got " + j.dump());
}

CycScalar from_coeffs(const json& arr, const FieldPtr& field) {
  if (arr.empty() || arr.size() > static_cast<std::size_t>(field->degree())) {
    throw ParseError("coefficient array must have 1.." + std::to_string(field->degree()) + " entries");
  }
  std::vector<Rational> c(field->degree(), Rational(0));
  for (std::size_t k = 0; k < arr.size(); ++k) c[k] = rational_from_json(arr[k]);
  return CycScalar(field, std::move(c));
}

}  // namespace

CycScalar scalar_from_json(const json& j, const FieldPtr& field) {
  if (j.is_array()) return from_coeffs(j, field);
  if (j.is_object()) {
    if (!j.contains("coeffs")) throw ParseError("scalar object needs \"coeffs\"");
    if (j.contains("l") && j["l"] != field->order()) {
      throw ParseError("scalar given for l = " + j["l"].dump() + ", expected " + std::to_string(field->order()));
    }
    return from_coeffs(j["coeffs"], field);
  }
  return CycScalar(field, rational_from_json(j));
}

json matrix_to_json(const intlat::IntMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return rows;
}

json verdict_to_json(const AdmissibilityVerdict& v) {
  json clauses = json::array();
  for (const auto& c : v.clauses) {
    clauses.push_back({{"id", c.id}, {"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  json out = {{"l", v.l}, {"admissible", v.admissible}, {"clauses", clauses}};
  if (v.witness) {
    json rows = json::array();
    json cols = json::array();
    for (auto i : v.witness->rows) rows.push_back(i + 1);
    for (auto i : v.witness->cols) cols.push_back(i + 1);
    out["witness"] = {{"minor", v.witness->value}, {"rows", rows}, {"cols", cols}};
  }
  return out;
}

json stratum_to_json(const Stratum& s) {
  json vanishing = json::array();
  json surviving = json::array();
  for (auto i : s.vanishing) vanishing.push_back(i + 1);
  for (auto i : s.surviving) surviving.push_back(i + 1);
  json elements = json::array();
  for (const auto& e : s.torus_elements) elements.push_back(core::to_string(e));
  return {{"label", s.label},         {"mu", s.mu},
          {"vanishing", vanishing},   {"surviving", surviving},
          {"torus", s.torus_names},   {"torus_elements", elements},
          {"S_mu", matrix_to_json(s.s_mu)}};
}

json record_to_json(const StratumRecord& r) {
  json out = stratum_to_json(r.stratum);
  out["rank"] = r.rank;
  out["r"] = r.rank / 2;
  out["leaf_dimension"] = r.leaf_dimension;
  out["admissible"] = r.admissible;
  out["admissibility_detail"] = r.admissibility_detail;
  out["rep_dimension"] = r.rep_dimension ? json(*r.rep_dimension) : json(nullptr);
  out["poisson_rank"] = r.poisson_rank ? json(*r.poisson_rank) : json(nullptr);
  out["consistent"] = r.consistent;
  out["inconsistencies"] = r.inconsistencies;
  if (r.rep) {
    out["rep"] = {{"dim", r.rep->dim},
                  {"verified", r.rep->verified},
                  {"failures", r.rep->failures},
                  {"commutant_dimension", r.rep->commutant ? json(*r.rep->commutant) : json(nullptr)}};
  }
  return out;
}

json report_to_json(const Report& r) {
  json strata = json::array();
  for (const auto& rec : r.strata) strata.push_back(record_to_json(rec));
  return {{"algebra", r.algebra}, {"l", r.l}, {"admissibility", verdict_to_json(r.verdict)},
          {"strata", strata},     {"pass", r.pass()}};
}

json checks_to_json(const std::vector<orealg::CheckResult>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

json violations_to_json(const std::vector<Violation>& violations) {
  json out = json::array();
  for (const auto& v : violations) out.push_back({{"check", v.check}, {"detail", v.detail}});
  return out;
}

json lattice_to_json(const qtorus::CenterLattice& lat) {
  return {{"at_eps", lat.at_eps}, {"l", lat.l}, {"basis", lat.basis}};
}

}  // namespace qsolv::strat
