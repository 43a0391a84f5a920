#include "qsolv/strat/stratum.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qsolv/errors.hpp"
#include "qsolv/qadjoint/adjoint.hpp"
#include "qsolv/qrep/rep.hpp"

namespace qsolv::strat {

using core::Exponents;
using intlat::IntVector;
using scalar::QLaurent;

namespace {

constexpr std::size_t kMaxEnumerated = 16;

std::string index_set(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k] + 1);
  return s + "}";
}

std::string mu_pattern(std::size_t n, const std::vector<std::size_t>& vanishing) {
  std::string mu(n, '0');
  for (std::size_t i : vanishing) {
    if (i < n) mu[i] = '1';
  }
  return mu;
}

}  // namespace

std::vector<Stratum> enumerate_strata_qcommuting(const OreAlgebraSpec& spec) {
  for (const auto& [key, r] : spec.relations) {
    if (!r.is_zero()) {
      throw NotQCommuting("r_" + std::to_string(key.first + 1) + std::to_string(key.second + 1) +
                          " is nonzero; declare strata explicitly");
    }
  }
  const std::size_t n = spec.n;
  const std::size_t dim = spec.dimension();
  if (n > kMaxEnumerated) throw TooLarge("more than 16 skew generators to stratify");

  std::vector<std::vector<std::size_t>> subsets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) d.push_back(i);
    }
    subsets.push_back(std::move(d));
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  std::vector<Stratum> out;
  for (const auto& d : subsets) {
    Stratum st;
    st.label = index_set(d);
    st.mu = mu_pattern(n, d);
    st.vanishing = d;
    for (std::size_t i = 0; i < dim; ++i) {
      if (std::find(d.begin(), d.end(), i) == d.end()) st.surviving.push_back(i);
    }
    for (std::size_t i : st.surviving) {
      st.torus_names.push_back("x" + std::to_string(i + 1));
      st.torus_elements.push_back(NcPoly::monomial(core::unit_exponents(dim, i), QLaurent(1L)));
    }
    st.s_mu = spec.S.submatrix(st.surviving, st.surviving);
    st.torus = qtorus::TorusAlgebra(st.s_mu);
    out.push_back(std::move(st));
  }
  return out;
}

namespace {

std::optional<IntVector> weight_vector(const OreAlgebra& alg, const NcPoly& a) {
  std::optional<IntVector> w;
  for (const auto& [t, c] : a.terms()) {
    IntVector v;
    for (std::size_t i = 0; i < alg.num_skew(); ++i) v.push_back(alg.weight(i, t));
    if (w && *w != v) return std::nullopt;
    w = v;
  }
  return w;
}

bool touches(const Exponents& t, const std::vector<std::size_t>& idx) {
  return std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return t[i] != 0; });
}

/// Largest monomial in degree-lexicographic order.
Exponents leading_exponents(const NcPoly& a) {
  const Exponents* best = nullptr;
  for (const auto& [t, c] : a.terms()) {
    if (!best || core::total_degree(t) > core::total_degree(*best) ||
        (core::total_degree(t) == core::total_degree(*best) && t > *best)) {
      best = &t;
    }
  }
  return *best;
}

/// k with a = q^k b, if any.
std::optional<std::int64_t> q_ratio(const NcPoly& a, const NcPoly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const auto& [t, cb] = *b.terms().begin();
  const QLaurent ca = a.coeff(t);
  if (ca.is_zero()) return std::nullopt;
  const std::int64_t k = ca.min_exponent() - cb.min_exponent();
  if (b * QLaurent::monomial(k) != a) return std::nullopt;
  return k;
}

}  // namespace

StratumValidation validate_user_stratum(const OreAlgebra& alg, const StratumDeclaration& decl) {
  StratumValidation out;
  auto violate = [&](const std::string& check, const std::string& detail) {
    out.violations.push_back({check, decl.name + ": " + detail});
  };
  const std::size_t dim = alg.dimension();
  const std::size_t n = alg.num_skew();

  std::map<std::string, NcPoly> names;
  for (const auto& [name, expr] : decl.derived) {
    try {
      names[name] = parse_element(expr, alg, names);
    } catch (const Error& e) {
      violate("names", "derived element " + name + ": " + e.what());
    }
  }
  auto resolve = [&](const std::vector<std::string>& items, const char* role) {
    std::vector<NcPoly> vals;
    for (const auto& item : items) {
      try {
        vals.push_back(parse_element(item, alg, names));
      } catch (const Error& e) {
        violate("names", std::string(role) + " entry '" + item + "': " + e.what());
        vals.emplace_back();
      }
    }
    return vals;
  };
  const std::vector<NcPoly> vanish = resolve(decl.vanish, "vanish");
  const std::vector<NcPoly> invert = resolve(decl.invert, "invert");
  if (!out.violations.empty()) return out;

  for (const auto& v : decl.vanish) {
    if (std::find(decl.invert.begin(), decl.invert.end(), v) != decl.invert.end()) {
      violate("disjoint", "'" + v + "' is declared both vanishing and inverted");
    }
  }

  for (std::size_t k = 0; k < vanish.size(); ++k) {
    if (vanish[k].is_zero()) {
      violate("ideal", "vanishing entry '" + decl.vanish[k] + "' is zero");
    } else if (!weight_vector(alg, vanish[k])) {
      violate("h-weight", "vanishing entry '" + decl.vanish[k] + "' is not an H-weight vector");
    }
  }
  if (!out.violations.empty()) return out;

  // The quotient is computed by dropping monomials when every vanishing
  // element is a skew generator; otherwise each must be q-normal and the
  // checks below run in the algebra itself.
  std::vector<std::size_t> gens;
  bool monomial_ideal = true;
  for (const auto& v : vanish) {
    const auto& [t, c] = *v.terms().begin();
    std::size_t nz = 0;
    std::size_t at = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (t[i] != 0) {
        ++nz;
        at = i;
      }
    }
    if (v.is_monomial() && nz == 1 && t[at] == 1 && c.is_monomial() && at < n) {
      gens.push_back(at);
    } else {
      monomial_ideal = false;
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  if (monomial_ideal) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const NcPoly r = alg.relation_term(i, j);
        if (r.is_zero()) continue;
        const bool hit = std::binary_search(gens.begin(), gens.end(), i) || std::binary_search(gens.begin(), gens.end(), j);
        if (!hit) continue;
        for (const auto& [t, c] : r.terms()) {
          if (!touches(t, gens)) {
            violate("ideal", "the relation for (x" + std::to_string(i + 1) + ", x" + std::to_string(j + 1) +
                                 ") puts " + core::monomial_to_string(t) +
                                 " into the ideal, which is then not spanned by monomials");
            break;
          }
        }
      }
    }
  } else {
    for (std::size_t k = 0; k < vanish.size(); ++k) {
      const NcPoly& u = vanish[k];
      if (u.max_degree() == 0) {
        violate("ideal", "vanishing entry '" + decl.vanish[k] + "' is a unit");
        continue;
      }
      for (std::size_t g = 0; g < dim; ++g) {
        const NcPoly x = alg.generator(g);
        if (!q_ratio(alg.multiply(u, x), alg.multiply(x, u))) {
          violate("ideal", "vanishing entry '" + decl.vanish[k] + "' is neither a generator nor q-normal (x" +
                               std::to_string(g + 1) + ")");
          break;
        }
      }
    }
  }
  if (!out.violations.empty()) return out;

  auto reduce = [&](const NcPoly& a) {
    if (!monomial_ideal) return a;
    NcPoly r;
    for (const auto& [t, c] : a.terms()) {
      if (!touches(t, gens)) r.add_term(t, c);
    }
    return r;
  };

  std::vector<NcPoly> torus;
  for (std::size_t k = 0; k < invert.size(); ++k) {
    const NcPoly a = reduce(invert[k]);
    if (a.is_zero()) {
      violate("invert", "inverted entry '" + decl.invert[k] + "' vanishes in the quotient");
    } else if (!weight_vector(alg, a)) {
      violate("h-weight", "inverted entry '" + decl.invert[k] + "' is not an H-weight vector");
    }
    torus.push_back(a);
  }
  if (!out.violations.empty()) return out;

  const std::size_t k = torus.size();
  IntMatrix s_mu(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      std::optional<std::int64_t> e;
      try {
        e = q_ratio(reduce(alg.multiply(torus[a], torus[b])), reduce(alg.multiply(torus[b], torus[a])));
      } catch (const FuelExhausted& ex) {
        violate("q-commute", std::string(ex.what()));
        return out;
      }
      if (!e) {
        violate("q-commute", "'" + decl.invert[a] + "' and '" + decl.invert[b] + "' do not q-commute in the quotient");
        continue;
      }
      s_mu(a, b) = *e;
      s_mu(b, a) = -*e;
    }
  }

  const std::size_t expected = dim - (monomial_ideal ? gens.size() : vanish.size());
  if (k != expected) {
    violate("pbw", std::to_string(k) + " inverted elements for " + std::to_string(expected) +
                       " surviving generators");
  } else if (k > 0) {
    std::vector<IntVector> lead;
    for (const auto& a : torus) lead.push_back(leading_exponents(a));
    if (intlat::rank(IntMatrix::from_rows(lead, dim)) != k) {
      violate("pbw", "leading monomials of the inverted elements are dependent");
    }
  }
  if (!out.violations.empty()) return out;

  Stratum st;
  st.label = decl.name;
  st.mu = mu_pattern(n, gens);
  st.vanishing = monomial_ideal ? gens : std::vector<std::size_t>{};
  st.torus_names = decl.invert;
  st.torus_elements = torus;
  st.s_mu = s_mu;
  st.torus = qtorus::TorusAlgebra(s_mu);
  out.stratum = std::move(st);
  return out;
}

std::string to_string(Clause::Status s) {
  switch (s) {
    case Clause::Status::Pass:
      return "PASS";
    case Clause::Status::Fail:
      return "FAIL";
    case Clause::Status::Assumed:
      return "ASSUMED";
  }
  return "?";
}

namespace {

std::string minor_text(const intlat::MinorWitness& w) {
  std::vector<std::size_t> r = w.rows;
  std::vector<std::size_t> c = w.cols;
  return "minor " + std::to_string(w.value) + " on rows " + index_set(r) + ", columns " + index_set(c);
}

}  // namespace

AdmissibilityVerdict admissible(const OreAlgebraSpec& spec, Int l) {
  if (l < 2) throw BadParameters("admissible: l must be at least 2");
  const OreAlgebra alg(spec);
  AdmissibilityVerdict v;
  v.l = l;

  Clause a{"a", "x_i^l central at eps", Clause::Status::Pass, ""};
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (!orealg::lambda_member_at(alg, i, l)) bad.push_back(i);
  }
  if (!bad.empty()) {
    a.status = Clause::Status::Fail;
    a.detail = "not central: x_i^l for i in " + index_set(bad);
  } else {
    a.detail = spec.n == 0 ? "no skew generators" : "every x_i^l commutes with all generators at eps";
  }

  Clause b{"b", "l coprime to the minors of S", Clause::Status::Pass, ""};
  const auto mc = intlat::minor_coprimality(spec.S, l);
  if (!mc.coprime) {
    b.status = Clause::Status::Fail;
    v.witness = mc.witness;
    b.detail = "gcd with " + minor_text(*mc.witness) + " is " + std::to_string(intlat::gcd(l, mc.witness->value));
  } else {
    b.detail = "all nonzero minors are coprime to l";
  }

  Clause c{"c", "l coprime to the skew constants", Clause::Status::Pass, ""};
  std::vector<std::string> checked;
  for (std::size_t i = 0; i < spec.n; ++i) {
    bool has_delta = false;
    for (std::size_t j = i + 1; j < spec.n; ++j) has_delta = has_delta || !spec.relation(i, j).is_zero();
    if (!has_delta) continue;
    const Int s = i < spec.skew_constants.size() ? spec.skew_constants[i] : 0;
    checked.push_back("s" + std::to_string(i + 1) + " = " + std::to_string(s));
    if (intlat::gcd(l, s) != 1) {
      c.status = Clause::Status::Fail;
      c.detail = "gcd(l, s" + std::to_string(i + 1) + ") = " + std::to_string(intlat::gcd(l, s));
    }
  }
  if (c.status == Clause::Status::Pass) {
    if (checked.empty()) {
      c.detail = "no skew constants (no derivations)";
    } else {
      for (std::size_t k = 0; k < checked.size(); ++k) c.detail += (k ? ", " : "") + checked[k];
    }
  }

  Clause d{"d", "good reduction at eps", Clause::Status::Assumed,
           "no effective test; only finitely many points of bad reduction exist"};

  v.admissible = a.status == Clause::Status::Pass && b.status == Clause::Status::Pass &&
                 c.status == Clause::Status::Pass;
  v.clauses = {a, b, c, d};
  return v;
}

bool Report::pass() const {
  return std::all_of(strata.begin(), strata.end(), [](const StratumRecord& r) {
    return r.consistent && (!r.rep || (r.rep->verified && (!r.rep->commutant || *r.rep->commutant == 1)));
  });
}

namespace {

std::int64_t int_pow(Int l, std::size_t r) {
  std::int64_t x = 1;
  for (std::size_t k = 0; k < r; ++k) x = intlat::checked_mul(x, l);
  return x;
}

StratumRecord record_for(const Stratum& st, Int l, const ReportOptions& options) {
  StratumRecord rec;
  rec.stratum = st;
  rec.rank = intlat::rank(st.s_mu);
  rec.leaf_dimension = rec.rank;
  if (rec.rank % 2 != 0) {
    rec.consistent = false;
    rec.inconsistencies.push_back("odd rank " + std::to_string(rec.rank));
  }
  const auto mc = intlat::minor_coprimality(st.s_mu, l);
  rec.admissible = mc.coprime;
  rec.admissibility_detail = mc.coprime ? "l coprime to all minors of the stratum matrix"
                                        : "gcd with " + minor_text(*mc.witness) + " is not 1";
  if (!rec.admissible) return rec;

  rec.rep_dimension = int_pow(l, rec.rank / 2);
  if (st.torus.dimension() == 0) {
    rec.poisson_rank = 0;
  } else {
    rec.poisson_rank =
        qadjoint::generic_poisson_rank(st.torus, qadjoint::center_generators(st.torus, l), l, options.seed);
  }
  if (*rec.poisson_rank != rec.leaf_dimension) {
    rec.consistent = false;
    rec.inconsistencies.push_back("Poisson rank " + std::to_string(*rec.poisson_rank) + " differs from rank " +
                                  std::to_string(rec.rank));
  }
  if (*rec.rep_dimension != int_pow(l, *rec.poisson_rank / 2)) {
    rec.consistent = false;
    rec.inconsistencies.push_back("dimension is not l^(Poisson rank / 2)");
  }

  if (options.build_reps) {
    const qrep::Rep rep = qrep::build_torus_irrep(st.torus, l, qrep::trivial_character(st.torus));
    const qrep::RepCheck check = qrep::verify_rep(st.torus, rep);
    RepSummary sum;
    sum.dim = rep.dim;
    sum.verified = check.pass;
    sum.failures = check.failures;
    try {
      sum.commutant = qrep::commutant_dimension(rep);
    } catch (const TooLarge&) {
      sum.commutant.reset();
    }
    if (static_cast<std::int64_t>(sum.dim) != *rec.rep_dimension) {
      rec.consistent = false;
      rec.inconsistencies.push_back("built representation has dimension " + std::to_string(sum.dim));
    }
    rec.rep = std::move(sum);
  }
  return rec;
}

}  // namespace

Report stratum_report(const OreAlgebraSpec& spec, Int l, const std::vector<Stratum>& strata,
                      const ReportOptions& options) {
  Report rep;
  rep.algebra = spec.name;
  rep.l = l;
  rep.verdict = admissible(spec, l);
  for (const auto& st : strata) rep.strata.push_back(record_for(st, l, options));
  return rep;
}

}  // namespace qsolv::strat
