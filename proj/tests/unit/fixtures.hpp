#pragma once

#include "qsolv/orealg/ore.hpp"

namespace qsolv::fixtures {

using core::NcPoly;
using intlat::Int;
using intlat::IntMatrix;
using orealg::OreAlgebraSpec;
using scalar::QLaurent;

inline OreAlgebraSpec weyl_spec() {
  OreAlgebraSpec s;
  s.name = "weyl";
  s.n = 2;
  s.S = IntMatrix{{0, 1}, {-1, 0}};
  s.W = IntMatrix{{-1, 1}, {1, -1}};
  s.skew_constants = {1, 1};
  s.relations[{0, 1}] = NcPoly::constant(2, QLaurent(1L));
  return s;
}

inline OreAlgebraSpec plane_spec() {
  OreAlgebraSpec s;
  s.name = "plane";
  s.n = 2;
  s.S = IntMatrix{{0, 1}, {-1, 0}};
  s.skew_constants = {0, 0};
  return s;
}

// x1 x3 = q x3 x1 + 1 with x2 q-commuting with both.
inline OreAlgebraSpec chain_spec(Int c) {
  OreAlgebraSpec s;
  s.name = "chain";
  s.n = 3;
  s.S = IntMatrix{{0, c, 1}, {-c, 0, c}, {-1, -c, 0}};
  s.W = IntMatrix{{-1, c, 1}, {-c, 0, c}, {-1, -c, 1}};
  s.skew_constants = {1, 0, -1};
  s.relations[{0, 2}] = NcPoly::constant(3, QLaurent(1L));
  return s;
}

// Weyl pair x1, x2 with an invertible z: x1 z = q^{-b} z x1, x2 z = q^b z x2.
inline OreAlgebraSpec weyl_torus_spec(Int b) {
  OreAlgebraSpec s;
  s.name = "weyl-torus";
  s.n = 2;
  s.m = 1;
  s.S = IntMatrix{{0, 1, -b}, {-1, 0, b}, {b, -b, 0}};
  s.W = IntMatrix{{-1, 1, -b}, {1, -1, b}, {b, -b, 0}};
  s.skew_constants = {1, 1};
  s.relations[{0, 1}] = NcPoly::constant(3, QLaurent(1L));
  return s;
}

// u1 u2 = q^{s_12} u2 u1 and so on, with elementary divisors (1, 1, 2, 2).
inline const IntMatrix kMixed4{{0, 1, -1, 1}, {-1, 0, 1, 1}, {1, -1, 0, 0}, {-1, -1, 0, 0}};

}  // namespace qsolv::fixtures
