#include "qsolv/strat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qsolv/errors.hpp"
#include "qsolv/qadjoint/adjoint.hpp"
#include "qsolv/qrep/rep.hpp"
#include "qsolv/strat/report_json.hpp"

namespace qsolv::strat {

namespace {

using scalar::CycScalar;
using scalar::FieldPtr;

struct Options {
  std::string file;
  std::string out;
  Int l = 0;
  std::string l_range;
  bool build_reps = false;
  std::string char_file;
  std::string stratum;
  std::uint64_t seed = 0;
  std::uint64_t seeds = 1;
  int degree = 3;
  std::string suite = "all";
};

/// Raised for inputs that are well-formed but unusable.
struct InvalidInput : Error {
  using Error::Error;
};

json document(const std::string& command, const Options& opt, const AlgebraFile& file) {
  return {{"schema", kReportSchema}, {"command", command}, {"file", opt.file}, {"algebra", file.spec.name}};
}

void write_json(const Options& opt, json doc, int code) {
  if (opt.out.empty()) return;
  doc["pass"] = code == kExitPass;
  doc["exit_code"] = code;
  std::ofstream os(opt.out);
  if (!os) throw InvalidInput("cannot write " + opt.out);
  os << doc.dump(2) << "\n";
}

FieldPtr field_for(Int l) {
  if (l < 2) throw BadParameters("--l must be at least 2");
  return scalar::CycField::get(static_cast<int>(l));
}

std::vector<Stratum> collect_strata(const AlgebraFile& file, const OreAlgebra& alg, std::vector<Violation>& violations) {
  if (file.strata.empty()) return enumerate_strata_qcommuting(file.spec);
  std::vector<Stratum> out;
  for (const auto& decl : file.strata) {
    auto v = validate_user_stratum(alg, decl);
    if (v.stratum) out.push_back(std::move(*v.stratum));
    violations.insert(violations.end(), v.violations.begin(), v.violations.end());
  }
  return out;
}

void print_violations(std::ostream& out, const std::vector<Violation>& violations) {
  for (const auto& v : violations) out << "  violation [" << v.check << "] " << v.detail << "\n";
}

int cmd_validate(const Options& opt, std::ostream& out) {
  const AlgebraFile file = load_algebra_file(opt.file);
  const OreAlgebra alg(file.spec);
  auto violations = orealg::validate_spec(file.spec);
  json strata = json::array();
  for (const auto& decl : file.strata) {
    const auto v = validate_user_stratum(alg, decl);
    strata.push_back({{"name", decl.name},
                      {"valid", v.valid()},
                      {"S_mu", v.stratum ? matrix_to_json(v.stratum->s_mu) : json(nullptr)},
                      {"violations", violations_to_json(v.violations)}});
    violations.insert(violations.end(), v.violations.begin(), v.violations.end());
  }
  out << "algebra " << file.spec.name << ": n = " << file.spec.n << ", m = " << file.spec.m << ", "
      << file.spec.relations.size() << " relation(s), " << file.strata.size() << " declared stratum(s)\n";
  print_violations(out, violations);
  const int code = violations.empty() ? kExitPass : kExitFailed;
  out << (code == kExitPass ? "valid" : "invalid") << "\n";
  json doc = document("validate", opt, file);
  doc["violations"] = violations_to_json(violations);
  doc["strata"] = strata;
  write_json(opt, doc, code);
  return code;
}

int cmd_center(const Options& opt, std::ostream& out) {
  const AlgebraFile file = load_algebra_file(opt.file);
  field_for(opt.l);
  const OreAlgebra alg(file.spec);
  json powers = json::array();
  out << "algebra " << file.spec.name << ", l = " << opt.l << "\n";
  for (std::size_t i = 0; i < file.spec.n; ++i) {
    const bool central = orealg::lambda_member_at(alg, i, opt.l);
    powers.push_back({{"generator", i + 1}, {"central", central}});
    out << "  x" << i + 1 << "^" << opt.l << (central ? " is" : " is not") << " central at eps\n";
  }
  const qtorus::TorusAlgebra torus(file.spec.S);
  const auto generic = qtorus::center_generic(torus);
  const auto at_eps = qtorus::center_at_eps(torus, opt.l);
  auto print_lattice = [&](const char* what, const qtorus::CenterLattice& lat) {
    out << "  " << what << ":";
    if (lat.basis.empty()) out << " trivial";
    for (const auto& b : lat.basis) {
      out << " (";
      for (std::size_t k = 0; k < b.size(); ++k) out << (k ? "," : "") << b[k];
      out << ")";
    }
    out << "\n";
  };
  out << "torus with all generators inverted:\n";
  print_lattice("generic center exponents", generic);
  print_lattice("center exponents at eps", at_eps);
  int code = kExitPass;
  json brute = nullptr;
  if (torus.dimension() <= qtorus::kBruteForceMaxDim && opt.l <= qtorus::kBruteForceMaxOrder &&
      torus.dimension() > 0) {
    const bool agree = qtorus::brute_force_center(torus, opt.l).same_lattice(at_eps);
    brute = agree;
    out << "  brute-force enumeration " << (agree ? "agrees" : "DISAGREES") << "\n";
    if (!agree) code = kExitFailed;
  }
  json doc = document("center", opt, file);
  doc["l"] = opt.l;
  doc["powers"] = powers;
  doc["generic_center"] = lattice_to_json(generic);
  doc["center_at_eps"] = lattice_to_json(at_eps);
  doc["brute_force_agrees"] = brute;
  write_json(opt, doc, code);
  return code;
}

std::vector<Int> requested_orders(const Options& opt) {
  if (opt.l_range.empty()) {
    if (opt.l == 0) throw InvalidInput("admissible needs --l or --l-range");
    return {opt.l};
  }
  const auto dots = opt.l_range.find("..");
  if (dots == std::string::npos) throw InvalidInput("--l-range must look like A..B");
  Int a = 0;
  Int b = 0;
  try {
    a = std::stoll(opt.l_range.substr(0, dots));
    b = std::stoll(opt.l_range.substr(dots + 2));
  } catch (const std::exception&) {
    throw InvalidInput("--l-range must look like A..B");
  }
  if (a < 2 || b < a) throw InvalidInput("--l-range needs 2 <= A <= B");
  std::vector<Int> ls;
  for (Int l = a; l <= b; ++l) ls.push_back(l);
  return ls;
}

int cmd_admissible(const Options& opt, std::ostream& out) {
  const AlgebraFile file = load_algebra_file(opt.file);
  json verdicts = json::array();
  bool all = true;
  for (Int l : requested_orders(opt)) {
    const auto v = admissible(file.spec, l);
    all = all && v.admissible;
    out << "l = " << l << ": " << (v.admissible ? "admissible" : "not admissible") << "\n";
    for (const auto& c : v.clauses) {
      out << "  (" << c.id << ") " << c.name << ": " << to_string(c.status) << " - " << c.detail << "\n";
    }
    verdicts.push_back(verdict_to_json(v));
  }
  const int code = all ? kExitPass : kExitFailed;
  json doc = document("admissible", opt, file);
  doc["verdicts"] = verdicts;
  write_json(opt, doc, code);
  return code;
}

int cmd_strata(const Options& opt, std::ostream& out) {
  const AlgebraFile file = load_algebra_file(opt.file);
  field_for(opt.l);
  const OreAlgebra alg(file.spec);
  std::vector<Violation> violations;
  const auto strata = collect_strata(file, alg, violations);
  const Report rep = stratum_report(file.spec, opt.l, strata, {opt.build_reps, opt.seed});

  out << "algebra " << file.spec.name << ", l = " << opt.l << ": "
      << (rep.verdict.admissible ? "admissible" : "not admissible") << "\n";
  print_violations(out, violations);
  for (const auto& r : rep.strata) {
    out << "  stratum " << r.stratum.label << " (mu " << r.stratum.mu << "): rank " << r.rank << ", leaf dimension "
        << r.leaf_dimension;
    if (r.rep_dimension) {
      out << ", rep dimension " << *r.rep_dimension << ", Poisson rank " << *r.poisson_rank;
    } else {
      out << ", not admissible (" << r.admissibility_detail << ")";
    }
    if (r.rep) {
      out << ", built " << r.rep->dim << "x" << r.rep->dim << (r.rep->verified ? " verified" : " FAILED");
      if (r.rep->commutant) out << ", commutant " << *r.rep->commutant;
    }
    out << "\n";
    for (const auto& s : r.inconsistencies) out << "    inconsistent: " << s << "\n";
  }
  const int code = rep.pass() && violations.empty() ? kExitPass : kExitFailed;
  json doc = document("strata", opt, file);
  doc["report"] = report_to_json(rep);
  doc["violations"] = violations_to_json(violations);
  write_json(opt, doc, code);
  return code;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<CycScalar> scalar_list(const json& j, const char* key, const FieldPtr& f) {
  std::vector<CycScalar> out;
  if (!j.contains(key)) return out;
  if (!j[key].is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  for (const auto& v : j[key]) out.push_back(scalar_from_json(v, f));
  return out;
}

scalar::CycMatrix matrix_from_json(const json& j, const FieldPtr& f) {
  if (!j.is_array() || j.empty()) throw ParseError("a matrix must be a non-empty array of rows");
  const std::size_t n = j.size();
  scalar::CycMatrix m(n, n, f);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw ParseError("matrix row " + std::to_string(r + 1) + " malformed");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_from_json(j[r][c], f);
  }
  return m;
}

int cmd_rep(const Options& opt, std::ostream& out) {
  const AlgebraFile file = load_algebra_file(opt.file);
  const FieldPtr f = field_for(opt.l);
  const OreAlgebra alg(file.spec);
  const json chi = read_json_file(opt.char_file);
  if (!chi.is_object()) throw ParseError(opt.char_file + ": expected a JSON object");
  json doc = document("rep", opt, file);
  doc["l"] = opt.l;
  bool pass = true;

  if (chi.contains("matrices")) {
    std::vector<scalar::CycMatrix> mats;
    for (const auto& m : chi["matrices"]) mats.push_back(matrix_from_json(m, f));
    if (mats.size() != alg.dimension()) {
      throw InvalidInput("expected " + std::to_string(alg.dimension()) + " matrices, got " +
                         std::to_string(mats.size()));
    }
    const qrep::Rep rep = qrep::make_rep(opt.l, std::move(mats), "user");
    const auto check = qrep::verify_rep(alg, rep);
    const std::size_t commutant = qrep::commutant_dimension(rep);
    out << "user matrices (" << rep.dim << "x" << rep.dim << ") on " << file.spec.name << ": "
        << (check.pass ? "relations hold" : "relations FAIL") << ", commutant dimension " << commutant << "\n";
    for (const auto& s : check.failures) out << "  " << s << "\n";
    pass = pass && check.pass;
    doc["user"] = {{"dim", rep.dim}, {"verified", check.pass}, {"failures", check.failures},
                   {"commutant_dimension", commutant}};
  }

  if (chi.contains("nu") || chi.contains("alpha") || chi.contains("stratum") || !chi.contains("matrices")) {
    std::vector<Violation> violations;
    const auto strata = collect_strata(file, alg, violations);
    print_violations(out, violations);
    if (!violations.empty()) pass = false;
    std::string label = opt.stratum;
    if (label.empty() && chi.contains("stratum")) label = chi["stratum"].get<std::string>();
    const Stratum* st = nullptr;
    for (const auto& s : strata) {
      if (label.empty() || s.label == label) {
        st = &s;
        break;
      }
    }
    if (!st) throw InvalidInput("no valid stratum labelled '" + label + "'");
    qrep::CentralCharacter c = qrep::trivial_character(st->torus);
    if (chi.contains("nu") || chi.contains("alpha")) {
      c.nu = scalar_list(chi, "nu", f);
      c.alpha = scalar_list(chi, "alpha", f);
    }
    const qrep::Rep rep = qrep::build_torus_irrep(st->torus, opt.l, c);
    const auto check = qrep::verify_rep(st->torus, rep);
    std::optional<std::size_t> commutant;
    try {
      commutant = qrep::commutant_dimension(rep);
    } catch (const TooLarge&) {
      commutant.reset();
    }
    out << "stratum " << st->label << ": built " << rep.dim << "x" << rep.dim << " irreducible representation, "
        << (check.pass ? "relations and central character verified" : "verification FAILED");
    if (commutant) out << ", commutant dimension " << *commutant;
    out << "\n";
    for (const auto& s : check.failures) out << "  " << s << "\n";
    pass = pass && check.pass && (!commutant || *commutant == 1);
    json central = json::array();
    for (const auto& [u, v] : rep.central) central.push_back({{"element", core::to_string(u)}, {"value", scalar_to_json(v)}});
    doc["stratum"] = stratum_to_json(*st);
    doc["built"] = {{"dim", rep.dim},
                    {"verified", check.pass},
                    {"failures", check.failures},
                    {"central", central},
                    {"commutant_dimension", commutant ? json(*commutant) : json(nullptr)}};
  }
  const int code = pass ? kExitPass : kExitFailed;
  write_json(opt, doc, code);
  return code;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const AlgebraFile file = load_algebra_file(opt.file);
  field_for(opt.l);
  if (opt.degree < 0) throw InvalidInput("--degree must be non-negative");
  if (opt.suite != "all" && opt.suite != "ore" && opt.suite != "adjoint") {
    throw InvalidInput("--suite must be all, ore or adjoint");
  }
  const OreAlgebra alg(file.spec);
  const auto violations = orealg::validate_spec(file.spec);
  print_violations(out, violations);
  std::vector<orealg::CheckResult> results;
  for (std::uint64_t k = 0; k < opt.seeds; ++k) {
    const std::uint64_t seed = opt.seed + k;
    auto run = [&](const char* suite, auto&& fn) {
      try {
        for (auto& c : fn()) {
          c.name = std::string(suite) + ":" + c.name + "@" + std::to_string(seed);
          results.push_back(std::move(c));
        }
      } catch (const Error& e) {
        results.push_back({std::string(suite) + "@" + std::to_string(seed), false, e.what()});
      }
    };
    if (opt.suite != "adjoint") run("ore", [&] { return orealg::ore_identity_suite(alg, opt.l, seed, opt.degree); });
    if (opt.suite != "ore") {
      run("adjoint", [&] { return qadjoint::adjoint_property_suite(alg, opt.l, seed, opt.degree); });
    }
  }
  std::size_t failed = 0;
  for (const auto& c : results) {
    if (!c.pass) {
      ++failed;
      out << "  FAIL " << c.name << ": " << c.detail << "\n";
    }
  }
  out << file.spec.name << ", l = " << opt.l << ": " << results.size() - failed << "/" << results.size()
      << " checks passed, " << violations.size() << " validation violation(s)\n";
  const int code = failed == 0 && violations.empty() ? kExitPass : kExitFailed;
  json doc = document("verify", opt, file);
  doc["l"] = opt.l;
  doc["seed"] = opt.seed;
  doc["seeds"] = opt.seeds;
  doc["degree"] = opt.degree;
  doc["suite"] = opt.suite;
  doc["violations"] = violations_to_json(violations);
  doc["checks"] = checks_to_json(results);
  write_json(opt, doc, code);
  return code;
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for quantum solvable algebras at roots of unity", "qsolv"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("FILE", opt.file, "algebra definition file")->required();
    sub->add_option("--out", opt.out, "write a JSON report to this path");
  };
  auto* validate = app.add_subcommand("validate", "check the algebra and its declared strata");
  add_common(validate);
  auto* center = app.add_subcommand("center", "central monomials at q = eps");
  add_common(center);
  center->add_option("--l", opt.l, "order of the root of unity")->required();
  auto* adm = app.add_subcommand("admissible", "test admissibility of l");
  add_common(adm);
  auto* adm_l = adm->add_option("--l", opt.l, "order of the root of unity");
  auto* adm_range = adm->add_option("--l-range", opt.l_range, "range A..B of orders");
  adm_l->excludes(adm_range);
  auto* strata = app.add_subcommand("strata", "stratum report");
  add_common(strata);
  strata->add_option("--l", opt.l, "order of the root of unity")->required();
  strata->add_flag("--build-reps", opt.build_reps, "build and verify an irreducible representation per stratum");
  strata->add_option("--seed", opt.seed, "seed for random characters");
  auto* rep = app.add_subcommand("rep", "build or verify a representation");
  add_common(rep);
  rep->add_option("--l", opt.l, "order of the root of unity")->required();
  rep->add_option("--char", opt.char_file, "JSON file with the central character or matrices")->required();
  rep->add_option("--stratum", opt.stratum, "stratum label (default: the first stratum)");
  auto* verify = app.add_subcommand("verify", "run the identity suites");
  add_common(verify);
  verify->add_option("--l", opt.l, "order of the root of unity")->required();
  verify->add_option("--seed", opt.seed, "first seed");
  verify->add_option("--seeds", opt.seeds, "number of consecutive seeds");
  verify->add_option("--degree", opt.degree, "maximal degree of random elements");
  verify->add_option("--suite", opt.suite, "all, ore or adjoint");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInvalid;
  }

  try {
    if (*validate) return cmd_validate(opt, out);
    if (*center) return cmd_center(opt, out);
    if (*adm) return cmd_admissible(opt, out);
    if (*strata) return cmd_strata(opt, out);
    if (*rep) return cmd_rep(opt, out);
    if (*verify) return cmd_verify(opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidSpec& e) {
    err << "invalid algebra: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const BadParameters& e) {
    err << "bad parameters: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const NotQCommuting& e) {
    err << "not q-commuting: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const TooLarge& e) {
    err << "too large: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitInvalid;
}

}  // namespace qsolv::strat
