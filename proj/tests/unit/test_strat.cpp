#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "qsolv/errors.hpp"
#include "qsolv/strat/algebra_file.hpp"
#include "qsolv/strat/cli.hpp"
#include "qsolv/strat/report_json.hpp"
#include "qsolv/strat/stratum.hpp"
#include "unit/fixtures.hpp"

using namespace qsolv;
using namespace qsolv::strat;
using namespace qsolv::fixtures;
using scalar::CycScalar;

namespace {

const std::string kDir = QSOLV_FIXTURES_DIR;

std::string fixture(const std::string& name) { return kDir + "/" + name; }

NcPoly x(std::size_t dim, std::size_t i, std::int64_t e = 1) {
  return NcPoly::monomial(core::unit_exponents(dim, i, e), QLaurent(1L));
}

NcPoly c(std::size_t dim, const QLaurent& v) { return NcPoly::constant(dim, v); }

IntMatrix random_skew(std::mt19937_64& rng, std::size_t m, Int bound) {
  std::uniform_int_distribution<Int> d(-bound, bound);
  IntMatrix s(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      s(i, j) = d(rng);
      s(j, i) = -s(i, j);
    }
  }
  return s;
}

bool same_spec(const OreAlgebraSpec& a, const OreAlgebraSpec& b) {
  auto nonzero = [](const OreAlgebraSpec& s) {
    std::map<std::pair<std::size_t, std::size_t>, NcPoly> r;
    for (const auto& [k, v] : s.relations) {
      if (!v.is_zero()) r[k] = v;
    }
    return r;
  };
  return a.name == b.name && a.n == b.n && a.m == b.m && a.S == b.S && a.W == b.W &&
         a.skew_constants == b.skew_constants && nonzero(a) == nonzero(b);
}

int run_cli(std::vector<std::string> args, std::string* captured = nullptr) {
  args.insert(args.begin(), "qsolv");
  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (captured) *captured = out.str() + err.str();
  return code;
}

const char* kWeylText = R"(
[algebra]
name = weyl
n = 2
m = 0
S = [[0, 1], [-1, 0]]
skew_constants = [1, 1]
[weights]
W = [[-1, 1], [1, -1]]
[[relation]]
i = 1
j = 2
r = 1
)";

}  // namespace

TEST_CASE("expression parser precedence and powers") {
  const orealg::OreAlgebra weyl(weyl_spec());
  const QLaurent q = QLaurent::q();
  CHECK(parse_element("1 + 2*3", weyl) == c(2, QLaurent(7L)));
  CHECK(parse_element("-(1 - q)^2", weyl) == c(2, -(QLaurent(1L) - q) * (QLaurent(1L) - q)));
  CHECK(parse_element("q^-2*x2", weyl) == x(2, 1) * QLaurent::monomial(-2));
  // x y = q y x + 1 gives y x = q^-1 x y - q^-1
  const NcPoly yx = parse_element("x2*x1", weyl);
  CHECK(yx == NcPoly::monomial({1, 1}, QLaurent::monomial(-1)) - c(2, QLaurent::monomial(-1)));
  CHECK(parse_element("u*x2", weyl, {{"u", x(2, 0)}}) == NcPoly::monomial({1, 1}, QLaurent(1L)));

  const orealg::OreAlgebra torus([] {
    OreAlgebraSpec s;
    s.n = 0;
    s.m = 2;
    s.S = IntMatrix{{0, 1}, {-1, 0}};
    return s;
  }());
  CHECK(parse_element("x1^-1*x2^-3", torus) == NcPoly::monomial({-1, -3}, QLaurent(1L)));

  CHECK_THROWS_AS(parse_element("x1^-1", weyl), ParseError);
  CHECK_THROWS_AS(parse_element("(x1 + 1)^-1", torus), ParseError);
  CHECK_THROWS_AS(parse_element("x3", weyl), ParseError);
  CHECK_THROWS_AS(parse_element("v + 1", weyl), ParseError);
  CHECK_THROWS_AS(parse_expression("1 +"), ParseError);
  CHECK_THROWS_AS(parse_expression("(x1"), ParseError);
  CHECK_THROWS_AS(parse_expression("x1 $ x2"), ParseError);
  CHECK_THROWS_AS(parse_expression("x0"), ParseError);
}

TEST_CASE("printed elements parse back to themselves") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    OreAlgebraSpec s;
    s.n = 1 + trial % 3;
    s.m = trial % 2;
    s.S = random_skew(rng, s.n + s.m, 3);
    s.skew_constants.assign(s.n, 0);
    const orealg::OreAlgebra alg(s);
    const NcPoly a = orealg::random_element(alg, trial, 4);
    INFO(core::to_string(a));
    CHECK(parse_element(core::to_string(a), alg) == a);
  }
}

TEST_CASE("algebra file parsing") {
  const AlgebraFile f = parse_algebra_file(kWeylText);
  CHECK(same_spec(f.spec, weyl_spec()));
  CHECK(f.strata.empty());

  const AlgebraFile w = load_algebra_file(fixture("weyl.alg"));
  CHECK(same_spec(w.spec, weyl_spec()));
  REQUIRE(w.strata.size() == 2);
  CHECK(w.strata[0].name == "invert-y");
  CHECK(w.strata[0].invert == std::vector<std::string>{"x2", "u"});
  CHECK(w.strata[0].vanish.empty());
  CHECK(w.strata[1].vanish == std::vector<std::string>{"u"});

  const AlgebraFile t4 = load_algebra_file(fixture("torus4.alg"));
  CHECK(t4.spec.S == kMixed4);

  const AlgebraFile chain = parse_algebra_file(R"(
[algebra]
n = 3
S = [[0, 2, 1], [-2, 0, 2], [-1, -2, 0]]
skew_constants = [1, 0, -1]
[weights]
W = [[-1, 2, 1], [-2, 0, 2], [-1, -2, 1]]
[[relation]]
i = 1
j = 3
r = 1
)");
  OreAlgebraSpec expect = chain_spec(2);
  expect.name = "algebra";
  CHECK(same_spec(chain.spec, expect));
}

TEST_CASE("algebra file errors") {
  CHECK_THROWS_AS(load_algebra_file(fixture("malformed.alg")), ParseError);
  CHECK_THROWS_AS(load_algebra_file(fixture("does-not-exist.alg")), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("[algebra]\nS = [[0]]\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("[algebra]\nn = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("n = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("[algebra]\nn = 2\nS = [[0, 1], [-1, 0]]\nfoo = 3\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("[algebra]\nn = 2\nS = [[0, 1, 0], [-1, 0, 0]]\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("[algebra]\nn = 2\nS = [[0, 1], [-1, 0]\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("[algebra]\nn = x\nS = []\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("[bogus]\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file(std::string(kWeylText) + "[[relation]]\ni = 1\nj = 2\nr = 2\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file(std::string(kWeylText) + "[[relation]]\ni = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file(std::string(kWeylText) + "[[stratum]]\ninvert = [x2 +]\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file(std::string(kWeylText) + "[[stratum]]\nderive = x1 : 1\n"), ParseError);
  // not skew-symmetric
  CHECK_THROWS_AS(parse_algebra_file("[algebra]\nn = 2\nS = [[0, 1], [1, 0]]\n"), InvalidSpec);
  // r_12 may not involve x1
  CHECK_THROWS_AS(parse_algebra_file("[algebra]\nn = 2\nS = [[0, 1], [-1, 0]]\n[[relation]]\ni = 1\nj = 2\nr = x1\n"),
                  InvalidSpec);
}

TEST_CASE("file round trip is the identity on specs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    AlgebraFile f;
    f.spec.name = "random" + std::to_string(trial);
    f.spec.n = 1 + trial % 3;
    f.spec.m = trial % 3 == 0 ? 1 : 0;
    const std::size_t dim = f.spec.n + f.spec.m;
    f.spec.S = random_skew(rng, dim, 3);
    f.spec.skew_constants.assign(f.spec.n, static_cast<Int>(trial % 3) - 1);
    if (trial % 2) f.spec.W = f.spec.S;
    const orealg::OreAlgebra base(f.spec);
    for (std::size_t i = 0; i + 1 < f.spec.n; ++i) {
      for (std::size_t j = i + 1; j < f.spec.n; ++j) {
        if ((trial + i + j) % 2) f.spec.relations[{i, j}] = orealg::random_element(base, trial * 7 + i, 3, i + 1);
      }
    }
    if (trial % 4 == 0) f.strata.push_back({"s", {"x1"}, {"x2", "v"}, {{"v", "(q - 1)*x2 + 1"}}});
    const std::string text = serialize_algebra_file(f);
    INFO(text);
    const AlgebraFile back = parse_algebra_file(text);
    CHECK(same_spec(back.spec, f.spec));
    REQUIRE(back.strata.size() == f.strata.size());
    for (std::size_t k = 0; k < f.strata.size(); ++k) {
      CHECK(back.strata[k].name == f.strata[k].name);
      CHECK(back.strata[k].vanish == f.strata[k].vanish);
      CHECK(back.strata[k].invert == f.strata[k].invert);
      CHECK(back.strata[k].derived == f.strata[k].derived);
    }
    CHECK(serialize_algebra_file(back) == text);
  }
  for (const char* name : {"weyl.alg", "quantum_plane.alg", "torus4.alg", "skew2.alg", "commutative.alg",
                           "corrupted_weyl.alg"}) {
    const AlgebraFile f = load_algebra_file(fixture(name));
    CHECK(same_spec(parse_algebra_file(serialize_algebra_file(f)).spec, f.spec));
  }
}

TEST_CASE("q-commuting strata are the subsets of skew generators") {
  const auto plane = enumerate_strata_qcommuting(plane_spec());
  REQUIRE(plane.size() == 4);
  CHECK(plane[0].label == "{}");
  CHECK(plane[1].label == "{1}");
  CHECK(plane[2].label == "{2}");
  CHECK(plane[3].label == "{1,2}");
  CHECK(plane[0].s_mu == IntMatrix{{0, 1}, {-1, 0}});
  CHECK(plane[1].surviving == std::vector<std::size_t>{1});
  CHECK(plane[3].torus.dimension() == 0);
  CHECK(plane[2].mu == "01");

  OreAlgebraSpec pure;
  pure.m = 3;
  pure.S = IntMatrix{{0, 1, 2}, {-1, 0, 1}, {-2, -1, 0}};
  CHECK(enumerate_strata_qcommuting(pure).size() == 1);

  OreAlgebraSpec one;
  one.n = 1;
  one.m = 1;
  one.S = IntMatrix{{0, 2}, {-2, 0}};
  one.skew_constants = {0};
  CHECK(enumerate_strata_qcommuting(one).size() == 2);

  CHECK_THROWS_AS(enumerate_strata_qcommuting(weyl_spec()), NotQCommuting);
}

TEST_CASE("stratum matrices are restrictions with even rank") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    OreAlgebraSpec s;
    s.n = 1 + trial % 4;
    s.m = trial % 2;
    s.S = random_skew(rng, s.n + s.m, 3);
    s.skew_constants.assign(s.n, 0);
    const auto strata = enumerate_strata_qcommuting(s);
    CHECK(strata.size() == (std::size_t{1} << s.n));
    for (const auto& st : strata) {
      CHECK(st.s_mu == s.S.submatrix(st.surviving, st.surviving));
      CHECK(intlat::rank(st.s_mu) % 2 == 0);
      CHECK(st.surviving.size() + st.vanishing.size() == s.n + s.m);
    }
  }
}

TEST_CASE("user strata of the Weyl algebra") {
  const AlgebraFile w = load_algebra_file(fixture("weyl.alg"));
  const orealg::OreAlgebra alg(w.spec);
  const auto invert_y = validate_user_stratum(alg, w.strata[0]);
  REQUIRE(invert_y.valid());
  CHECK(invert_y.stratum->s_mu == IntMatrix{{0, -1}, {1, 0}});
  // y u = q^-1 u y, checked directly
  const NcPoly y = invert_y.stratum->torus_elements[0];
  const NcPoly u = invert_y.stratum->torus_elements[1];
  CHECK(alg.multiply(y, u) == alg.multiply(u, y) * QLaurent::monomial(-1));

  const auto vanish_u = validate_user_stratum(alg, w.strata[1]);
  REQUIRE(vanish_u.valid());
  CHECK(vanish_u.stratum->s_mu == IntMatrix(1, 1));

  auto first_check = [&](const StratumDeclaration& d) {
    const auto v = validate_user_stratum(alg, d);
    REQUIRE(!v.valid());
    CHECK(!v.stratum);
    return v.violations.front().check;
  };
  CHECK(first_check({"xy", {}, {"x1", "x2"}, {}}) == "q-commute");
  CHECK(first_check({"xplus1", {"x1 + 1"}, {"x2"}, {}}) == "h-weight");
  CHECK(first_check({"vanish-y", {"x2"}, {"x1"}, {}}) == "ideal");
  CHECK(first_check({"both", {"x2"}, {"x2"}, {}}) == "disjoint");
  CHECK(first_check({"names", {}, {"w"}, {}}) == "names");
  CHECK(first_check({"short", {}, {"x2"}, {}}) == "pbw");
  CHECK(first_check({"dependent", {}, {"x2", "x2^2"}, {}}) == "pbw");
  CHECK(first_check({"unit", {"q"}, {"x2"}, {}}) == "ideal");
  CHECK(first_check({"inhomogeneous", {}, {"x2", "x1 + x2"}, {}}) == "h-weight");
}

TEST_CASE("user strata agree with enumeration on q-commuting algebras") {
  const OreAlgebraSpec s = plane_spec();
  const orealg::OreAlgebra alg(s);
  const auto v = validate_user_stratum(alg, {"x1 gone", {"x1"}, {"x2"}, {}});
  REQUIRE(v.valid());
  CHECK(v.stratum->s_mu == enumerate_strata_qcommuting(s)[1].s_mu);
  CHECK(v.stratum->vanishing == std::vector<std::size_t>{0});
  const auto full = validate_user_stratum(alg, {"open", {}, {"x1", "x2"}, {}});
  REQUIRE(full.valid());
  CHECK(full.stratum->s_mu == s.S);
  CHECK(!validate_user_stratum(alg, {"zero", {"x1"}, {"x1*x2"}, {}}).valid());
}

TEST_CASE("admissibility verdicts") {
  const auto plane = admissible(plane_spec(), 3);
  CHECK(plane.admissible);
  CHECK(plane.clauses.size() == 4);
  CHECK(plane.clauses[3].status == Clause::Status::Assumed);

  OreAlgebraSpec skew2;
  skew2.m = 2;
  skew2.S = IntMatrix{{0, 2}, {-2, 0}};
  const auto bad = admissible(skew2, 2);
  CHECK(!bad.admissible);
  CHECK(bad.clauses[1].status == Clause::Status::Fail);
  REQUIRE(bad.witness);
  CHECK(std::abs(bad.witness->value) == 2);
  CHECK(admissible(skew2, 3).admissible);

  const auto weyl = admissible(weyl_spec(), 2);
  CHECK(weyl.admissible);
  for (std::size_t k = 0; k < 3; ++k) CHECK(weyl.clauses[k].status == Clause::Status::Pass);

  // x^l is central only when (l)_eps = 0, which needs s coprime to l
  OreAlgebraSpec w2 = weyl_spec();
  w2.S = IntMatrix{{0, 2}, {-2, 0}};
  w2.W = IntMatrix{{-2, 2}, {2, -2}};
  w2.skew_constants = {2, 2};
  const auto v = admissible(w2, 2);
  CHECK(!v.admissible);
  CHECK(v.clauses[2].status == Clause::Status::Fail);

  CHECK_THROWS_AS(admissible(plane_spec(), 1), BadParameters);
}

TEST_CASE("admissibility passes to every stratum") {
  std::mt19937_64 rng(23);
  int admissible_pairs = 0;
  for (int trial = 0; trial < 40; ++trial) {
    OreAlgebraSpec s;
    s.n = 2 + trial % 3;
    s.S = random_skew(rng, s.n, 3);
    s.skew_constants.assign(s.n, 0);
    for (Int l : {2, 3, 5, 7}) {
      if (!admissible(s, l).admissible) continue;
      ++admissible_pairs;
      for (const auto& st : enumerate_strata_qcommuting(s)) CHECK(intlat::minor_coprimality(st.s_mu, l).coprime);
    }
  }
  CHECK(admissible_pairs > 10);
}

TEST_CASE("stratum reports") {
  const Report plane = stratum_report(plane_spec(), 3, enumerate_strata_qcommuting(plane_spec()), {true, 0});
  std::vector<std::int64_t> dims;
  for (const auto& r : plane.strata) dims.push_back(r.rep_dimension.value_or(-1));
  CHECK(dims == std::vector<std::int64_t>{3, 1, 1, 1});
  CHECK(plane.pass());
  CHECK(plane.strata[0].rep->dim == 3);
  CHECK(plane.strata[0].rep->commutant == 1u);

  OreAlgebraSpec comm;
  comm.n = 2;
  comm.m = 1;
  comm.S = IntMatrix(3, 3);
  comm.skew_constants = {0, 0};
  const Report cr = stratum_report(comm, 5, enumerate_strata_qcommuting(comm));
  for (const auto& r : cr.strata) CHECK(r.rep_dimension == 1);

  const AlgebraFile w = load_algebra_file(fixture("weyl.alg"));
  const orealg::OreAlgebra alg(w.spec);
  std::vector<Stratum> strata;
  for (const auto& d : w.strata) strata.push_back(*validate_user_stratum(alg, d).stratum);
  const Report wr = stratum_report(w.spec, 2, strata, {true, 0});
  REQUIRE(wr.strata.size() == 2);
  CHECK(wr.strata[0].rep_dimension == 2);
  CHECK(wr.strata[1].rep_dimension == 1);
  CHECK(wr.pass());

  OreAlgebraSpec skew2;
  skew2.m = 2;
  skew2.S = IntMatrix{{0, 2}, {-2, 0}};
  const Report nr = stratum_report(skew2, 2, enumerate_strata_qcommuting(skew2));
  CHECK(!nr.strata[0].admissible);
  CHECK(!nr.strata[0].rep_dimension);
  CHECK(!nr.verdict.admissible);
}

TEST_CASE("report dimensions are internally consistent") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 12; ++trial) {
    OreAlgebraSpec s;
    s.n = 2 + trial % 2;
    s.S = random_skew(rng, s.n, 2);
    s.skew_constants.assign(s.n, 0);
    for (Int l : {3, 5}) {
      const Report rep = stratum_report(s, l, enumerate_strata_qcommuting(s), {false, static_cast<std::uint64_t>(trial)});
      for (const auto& r : rep.strata) {
        CHECK(r.consistent);
        CHECK(r.leaf_dimension == r.rank);
        if (!r.rep_dimension) continue;
        std::int64_t expect = 1;
        for (std::size_t k = 0; k < r.rank / 2; ++k) expect *= l;
        CHECK(*r.rep_dimension == expect);
        CHECK(r.poisson_rank == r.rank);
      }
    }
  }
}

TEST_CASE("json scalars") {
  const auto f = scalar::CycField::get(5);
  const CycScalar a = CycScalar::eps_power(f, 2) * CycScalar(scalar::Rational(3, 7)) + CycScalar(f, scalar::Rational(-1));
  const json j = scalar_to_json(a);
  CHECK(j["l"] == 5);
  CHECK(scalar_from_json(j, f) == a);
  CHECK(scalar_from_json(j["coeffs"], f) == a);
  CHECK(scalar_from_json(json(4), f) == CycScalar(f, scalar::Rational(4)));
  CHECK(scalar_from_json(json("-2/6"), f) == CycScalar(f, scalar::Rational(-1, 3)));
  CHECK_THROWS_AS(scalar_from_json(json("abc"), f), ParseError);
  CHECK_THROWS_AS(scalar_from_json(json::array({1, 2, 3, 4, 5}), f), ParseError);
  CHECK_THROWS_AS(scalar_from_json(json{{"l", 3}, {"coeffs", {1}}}, f), ParseError);
}

TEST_CASE("command line exit codes") {
  CHECK(run_cli({"validate", fixture("weyl.alg")}) == kExitPass);
  CHECK(run_cli({"validate", fixture("malformed.alg")}) == kExitInvalid);
  CHECK(run_cli({"validate", fixture("missing.alg")}) == kExitInvalid);
  CHECK(run_cli({"verify", fixture("corrupted_weyl.alg"), "--l", "2"}) == kExitFailed);
  CHECK(run_cli({"verify", fixture("weyl.alg"), "--l", "2", "--seed", "3", "--degree", "2"}) == kExitPass);
  CHECK(run_cli({"verify", fixture("weyl.alg"), "--l", "1"}) == kExitInvalid);
  CHECK(run_cli({"verify", fixture("weyl.alg"), "--l", "2", "--suite", "bogus"}) == kExitInvalid);
  CHECK(run_cli({"admissible", fixture("skew2.alg"), "--l", "2"}) == kExitFailed);
  CHECK(run_cli({"admissible", fixture("skew2.alg"), "--l", "3"}) == kExitPass);
  CHECK(run_cli({"admissible", fixture("skew2.alg"), "--l-range", "3..x"}) == kExitInvalid);
  CHECK(run_cli({"admissible", fixture("skew2.alg")}) == kExitInvalid);
  CHECK(run_cli({"strata", fixture("weyl.alg"), "--l", "2", "--build-reps"}) == kExitPass);
  CHECK(run_cli({"strata", fixture("corrupted_weyl.alg"), "--l", "2"}) == kExitInvalid);
  CHECK(run_cli({"center", fixture("quantum_plane.alg"), "--l", "3"}) == kExitPass);
  CHECK(run_cli({"rep", fixture("weyl.alg"), "--l", "2", "--char", fixture("weyl_matrices.json")}) == kExitPass);
  CHECK(run_cli({"rep", fixture("weyl.alg"), "--l", "2", "--char", fixture("missing.json")}) == kExitInvalid);
  CHECK(run_cli({"bogus"}) == kExitInvalid);
  CHECK(run_cli({}) == kExitInvalid);
}

TEST_CASE("command line JSON output") {
  const std::string path = "test_strat_report.json";
  std::string text;
  REQUIRE(run_cli({"strata", fixture("quantum_plane.alg"), "--l", "3", "--out", path}, &text) == kExitPass);
  CHECK(text.find("rep dimension 3") != std::string::npos);
  std::ifstream in(path);
  const json doc = json::parse(in);
  CHECK(doc["schema"] == kReportSchema);
  CHECK(doc["command"] == "strata");
  CHECK(doc["pass"] == true);
  const auto& strata = doc["report"]["strata"];
  REQUIRE(strata.size() == 4);
  CHECK(strata[0]["rep_dimension"] == 3);
  CHECK(strata[0]["rank"] == 2);
  CHECK(strata[3]["rep_dimension"] == 1);
  CHECK(doc["report"]["admissibility"]["clauses"][3]["status"] == "ASSUMED");
  std::remove(path.c_str());
}
