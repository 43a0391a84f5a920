#include <random>

#include "doctest.h"
#include "qsolv/errors.hpp"
#include "qsolv/qtorus/torus.hpp"

using namespace qsolv;
using namespace qsolv::qtorus;
using scalar::QLaurent;

namespace {

const IntMatrix kPlane{{0, 1}, {-1, 0}};
const IntMatrix kMixed4{{0, 1, -1, 1}, {-1, 0, 1, 1}, {1, -1, 0, 0}, {-1, -1, 0, 0}};

IntMatrix random_skew(std::mt19937& rng, std::size_t m, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix s(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      s(i, j) = dist(rng);
      s(j, i) = -s(i, j);
    }
  }
  return s;
}

Exponents random_exponents(std::mt19937& rng, std::size_t m) {
  std::uniform_int_distribution<int> dist(-2, 2);
  Exponents t(m);
  for (auto& e : t) e = dist(rng);
  return t;
}

NcPoly random_element(std::mt19937& rng, const TorusAlgebra& t) {
  std::uniform_int_distribution<int> nterms(1, 4), coef(-3, 3), qexp(-2, 2);
  NcPoly p;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    const int c = coef(rng);
    p += t.monomial(random_exponents(rng, t.dimension()),
                    QLaurent::monomial(qexp(rng), c == 0 ? 1 : c));
  }
  return p;
}

}  // namespace

TEST_CASE("torus multiplication examples") {
  TorusAlgebra plane(kPlane);
  const NcPoly u1 = plane.generator(0), u2 = plane.generator(1);
  CHECK(plane.multiply(plane.one(), u1) == u1);
  CHECK(plane.multiply(u2, u1) == plane.monomial({1, 1}, QLaurent::monomial(-1)));
  CHECK(plane.multiply(u1, u2) == plane.monomial({1, 1}));
  // u^a u^{-a} is a unit scalar q^{kappa(a,-a)}.
  const Exponents a{2, 3};
  const NcPoly prod = plane.multiply(plane.monomial(a), plane.monomial({-2, -3}));
  CHECK(prod == plane.constant(QLaurent::monomial(cocycle(kPlane, a, {-2, -3}))));
  CHECK(plane.multiply(plane.monomial(a), plane.inverse(plane.monomial(a))) == plane.one());
  CHECK_THROWS_AS(plane.inverse(u1 + u2), NotDivisible);
  CHECK_THROWS_AS(TorusAlgebra(IntMatrix{{0, 1}, {1, 0}}), BadParameters);
}

TEST_CASE("torus multiplication is associative") {
  for (int seed = 0; seed < 50; ++seed) {
    std::mt19937 rng(static_cast<unsigned>(seed));
    TorusAlgebra t(random_skew(rng, 2 + seed % 3, 3));
    const NcPoly a = random_element(rng, t), b = random_element(rng, t), c = random_element(rng, t);
    CHECK(t.multiply(t.multiply(a, b), c) == t.multiply(a, t.multiply(b, c)));
  }
}

TEST_CASE("commutation pairing") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + trial % 3;
    TorusAlgebra t(random_skew(rng, m, 3));
    const Exponents a = random_exponents(rng, m), b = random_exponents(rng, m);
    const NcPoly ua = t.monomial(a), ub = t.monomial(b);
    CHECK(t.multiply(ua, ub) == t.multiply(ub, ua) * QLaurent::monomial(pairing(t.skew_matrix(), a, b)));
  }
}

TEST_CASE("generic centers") {
  CHECK(center_generic(TorusAlgebra(kPlane)).basis.empty());
  CHECK(center_generic(TorusAlgebra(IntMatrix(2, 2))).basis ==
        std::vector<IntVector>{{1, 0}, {0, 1}});
  CHECK(center_generic(TorusAlgebra(IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}})).basis ==
        std::vector<IntVector>{{0, 0, 1}});
  // Every basis monomial commutes with every generator at indeterminate q.
  TorusAlgebra t(IntMatrix{{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}});
  for (const auto& n : center_generic(t).basis) {
    for (std::size_t i = 0; i < 3; ++i) CHECK(t.commutator(t.monomial(n), t.generator(i)).is_zero());
  }
}

TEST_CASE("centers at a root of unity") {
  const std::vector<IntVector> three{{3, 0}, {0, 3}};
  CHECK(center_at_eps(TorusAlgebra(kPlane), 3).basis == three);
  CHECK(brute_force_center(TorusAlgebra(kPlane), 3).basis == three);
  CHECK(center_at_eps(TorusAlgebra(IntMatrix(3, 3)), 4).basis ==
        std::vector<IntVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(brute_force_center(TorusAlgebra(IntMatrix(2, 2)), 2).basis ==
        std::vector<IntVector>{{1, 0}, {0, 1}});
  CHECK(center_at_eps(TorusAlgebra(IntMatrix{{0, 6}, {-6, 0}}), 5).basis ==
        std::vector<IntVector>{{5, 0}, {0, 5}});
  const IntMatrix m3{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}};
  const std::vector<IntVector> expected{{5, 0, 0}, {0, 5, 0}, {0, 0, 1}};
  CHECK(brute_force_center(TorusAlgebra(m3), 5).basis == expected);
  CHECK(center_at_eps(TorusAlgebra(m3), 5).basis == expected);
  CHECK_THROWS_AS(brute_force_center(TorusAlgebra(IntMatrix(5, 5)), 2), TooLarge);
  CHECK_THROWS_AS(brute_force_center(TorusAlgebra(kPlane), 8), TooLarge);
}

TEST_CASE("center at eps agrees with brute force on random tori") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    TorusAlgebra t(random_skew(rng, 2 + trial % 2, 3));
    for (Int l = 1; l <= 6; ++l) {
      CHECK(center_at_eps(t, l).same_lattice(brute_force_center(t, l)));
    }
  }
}

TEST_CASE("l-th powers of generators are central at eps") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t m = 2 + trial % 3;
    TorusAlgebra t(random_skew(rng, m, 4));
    for (Int l = 2; l <= 7; ++l) {
      const auto field = scalar::CycField::get(static_cast<int>(l));
      const CenterLattice c = center_at_eps(t, l);
      for (std::size_t i = 0; i < m; ++i) {
        CHECK(c.contains(core::unit_exponents(m, i, l)));
        CHECK(core::specialize(t.commutator(t.generator(i, l), t.generator((i + 1) % m)), field).is_zero());
      }
    }
  }
}

TEST_CASE("torus decomposition") {
  const auto plane = torus_decompose(TorusAlgebra(kPlane));
  CHECK(plane.y == std::vector<Exponents>{{1, 0}, {0, 1}});
  CHECK(plane.z.empty());
  CHECK(plane.form.d == IntVector{1});

  const auto flat = torus_decompose(TorusAlgebra(IntMatrix(3, 3)));
  CHECK(flat.y.empty());
  CHECK(flat.z.size() == 3);

  TorusAlgebra t(kMixed4);
  const auto dec = torus_decompose(t);
  CHECK(dec.y.size() + dec.z.size() == 4);
  for (std::size_t k = 0; k < dec.form.r(); ++k) {
    const NcPoly y1 = t.monomial(dec.y[2 * k]), y2 = t.monomial(dec.y[2 * k + 1]);
    CHECK(t.multiply(y1, y2) == t.multiply(y2, y1) * QLaurent::monomial(dec.form.d[k]));
  }
  for (const auto& z : dec.z) {
    for (std::size_t i = 0; i < 4; ++i) CHECK(t.commutator(t.monomial(z), t.generator(i)).is_zero());
  }
  // In y-coordinates c = W^{-1} n the pairing is the block form.
  const IntMatrix winv = intlat::unimodular_inverse(dec.form.W);
  const IntMatrix block = dec.form.block_form();
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Exponents a = random_exponents(rng, 4), b = random_exponents(rng, 4);
    CHECK(pairing(kMixed4, a, b) == pairing(block, winv * a, winv * b));
  }
}
