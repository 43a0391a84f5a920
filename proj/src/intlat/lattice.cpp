#include "qsolv/intlat/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "qsolv/errors.hpp"

namespace qsolv::intlat {

namespace {

struct Pos {
  std::size_t i;
  std::size_t j;
};

// Smallest nonzero entry (by absolute value) of the trailing block.
std::optional<Pos> min_entry(const IntMatrix& a, std::size_t from) {
  std::optional<Pos> best;
  for (std::size_t i = from; i < a.rows(); ++i) {
    for (std::size_t j = from; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!best || std::llabs(a(i, j)) < std::llabs(a(best->i, best->j))) best = Pos{i, j};
    }
  }
  return best;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

IntVector SmithForm::elementary_divisors() const {
  IntVector d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(D(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm f{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  IntMatrix& D = f.D;
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    auto piv = min_entry(D, t);
    if (!piv) break;
    for (;;) {
      D.swap_rows(t, piv->i);
      f.U.swap_rows(t, piv->i);
      D.swap_cols(t, piv->j);
      f.V.swap_cols(t, piv->j);
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        const Int q = floor_div(D(i, t), D(t, t));
        D.add_row_multiple(i, t, -q);
        f.U.add_row_multiple(i, t, -q);
        dirty |= D(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        const Int q = floor_div(D(t, j), D(t, t));
        D.add_col_multiple(j, t, -q);
        f.V.add_col_multiple(j, t, -q);
        dirty |= D(t, j) != 0;
      }
      if (!dirty) {
        std::optional<std::size_t> bad_row;
        for (std::size_t i = t + 1; i < m && !bad_row; ++i) {
          for (std::size_t j = t + 1; j < n; ++j) {
            if (D(i, j) % D(t, t) != 0) {
              bad_row = i;
              break;
            }
          }
        }
        if (!bad_row) break;
        D.add_row_multiple(t, *bad_row, 1);
        f.U.add_row_multiple(t, *bad_row, 1);
      }
      piv = min_entry(D, t);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      f.U.negate_row(t);
    }
  }
  f.rank = t;
  return f;
}

IntVector elementary_divisors(const IntMatrix& a) {
  return smith_normal_form(a).elementary_divisors();
}

std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

IntMatrix AlternatingForm::block_form() const {
  const std::size_t m = 2 * d.size() + t;
  IntMatrix b(m, m);
  for (std::size_t k = 0; k < d.size(); ++k) {
    b(2 * k, 2 * k + 1) = d[k];
    b(2 * k + 1, 2 * k) = -d[k];
  }
  return b;
}

AlternatingForm alternating_normal_form(const IntMatrix& s) {
  if (!s.is_skew_symmetric()) throw BadParameters("alternating_normal_form: matrix is not skew-symmetric");
  const std::size_t M = s.rows();
  IntMatrix A = s;
  IntMatrix W = IntMatrix::identity(M);
  // Congruence moves: the basis change is mirrored on rows and columns of A.
  auto cswap = [&](std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    A.swap_cols(a, b);
    W.swap_cols(a, b);
  };
  auto cadd = [&](std::size_t a, std::size_t b, Int c) {  // e_a += c e_b
    A.add_col_multiple(a, b, c);
    A.add_row_multiple(a, b, c);
    W.add_col_multiple(a, b, c);
  };

  AlternatingForm out;
  std::size_t p = 0;
  while (p + 1 < M) {
    std::optional<Pos> piv;
    for (std::size_t i = p; i < M; ++i) {
      for (std::size_t j = i + 1; j < M; ++j) {
        if (A(i, j) != 0 && (!piv || std::llabs(A(i, j)) < std::llabs(A(piv->i, piv->j)))) {
          piv = Pos{i, j};
        }
      }
    }
    if (!piv) break;
    std::size_t i = piv->i, j = piv->j;
    cswap(p, i);
    if (j == p) j = i;
    cswap(p + 1, j);

    for (;;) {
      const Int d = A(p, p + 1);
      bool dirty = false;
      for (std::size_t k = p + 2; k < M; ++k) {
        if (A(p, k) != 0) cadd(k, p + 1, -floor_div(A(p, k), d));
        if (A(p + 1, k) != 0) cadd(k, p, -floor_div(A(p + 1, k), A(p + 1, p)));
        dirty |= A(p, k) != 0 || A(p + 1, k) != 0;
      }
      if (dirty) {
        std::size_t best_row = p, best_col = M;
        for (std::size_t k = p + 2; k < M; ++k) {
          for (std::size_t r : {p, p + 1}) {
            if (A(r, k) != 0 && (best_col == M || std::llabs(A(r, k)) < std::llabs(A(best_row, best_col)))) {
              best_row = r;
              best_col = k;
            }
          }
        }
        if (best_row == p) {
          cswap(p + 1, best_col);
        } else {
          cswap(p, best_col);
        }
        continue;
      }
      std::optional<std::size_t> bad;
      for (std::size_t a = p + 2; a < M && !bad; ++a) {
        for (std::size_t b = a + 1; b < M; ++b) {
          if (A(a, b) % d != 0) {
            bad = a;
            break;
          }
        }
      }
      if (!bad) break;
      cadd(p, *bad, 1);
    }
    if (A(p, p + 1) < 0) cswap(p, p + 1);
    out.d.push_back(A(p, p + 1));
    p += 2;
  }
  out.t = M - 2 * out.d.size();
  out.W = std::move(W);
  return out;
}

std::vector<IntVector> kernel_basis(const IntMatrix& a) {
  const SmithForm f = smith_normal_form(a);
  std::vector<IntVector> basis;
  for (std::size_t j = f.rank; j < a.cols(); ++j) basis.push_back(f.V.column(j));
  return basis;
}

std::vector<IntVector> hnf_basis(const std::vector<IntVector>& generators, std::size_t dim) {
  std::vector<IntVector> rows;
  for (const auto& g : generators) {
    if (g.size() != dim) throw BadParameters("hnf_basis: vector has wrong dimension");
    rows.push_back(g);
  }
  auto add_multiple = [](IntVector& a, const IntVector& b, Int c) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = checked_add(a[k], checked_mul(c, b[k]));
  };
  std::size_t cur = 0;
  for (std::size_t col = 0; col < dim && cur < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = cur; r < rows.size(); ++r) {
        if (rows[r][col] != 0 &&
            (best == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[best][col]))) {
          best = r;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[cur], rows[best]);
      bool done = true;
      for (std::size_t r = cur + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        add_multiple(rows[r], rows[cur], -floor_div(rows[r][col], rows[cur][col]));
        done &= rows[r][col] == 0;
      }
      if (done) break;
    }
    if (cur >= rows.size() || rows[cur][col] == 0) continue;
    if (rows[cur][col] < 0) {
      for (auto& x : rows[cur]) x = checked_sub(0, x);
    }
    for (std::size_t r = 0; r < cur; ++r) {
      add_multiple(rows[r], rows[cur], -floor_div(rows[r][col], rows[cur][col]));
    }
    ++cur;
  }
  rows.resize(cur);
  return rows;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw BadParameters("solve_integer: right-hand side has wrong length");
  const SmithForm f = smith_normal_form(a);
  const IntVector ub = f.U * b;
  IntVector y(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < f.rank) {
      if (ub[i] % f.D(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / f.D(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return f.V * y;
}

std::optional<IntVector> lattice_coordinates(const std::vector<IntVector>& basis,
                                             const IntVector& v) {
  if (basis.empty()) {
    for (Int x : v) {
      if (x != 0) return std::nullopt;
    }
    return IntVector{};
  }
  return solve_integer(IntMatrix::from_columns(basis, v.size()), v);
}

LiftResult solve_and_lift_congruence(const IntMatrix& s, Int l, const IntVector& n) {
  if (l <= 0) throw BadParameters("solve_and_lift_congruence: l must be positive");
  if (n.size() != s.cols()) throw BadParameters("solve_and_lift_congruence: vector has wrong length");
  const IntVector sn = s * n;
  bool exact = true;
  for (Int x : sn) {
    if (mod_pos(x, l) != 0) throw BadParameters("solve_and_lift_congruence: S n is not 0 modulo l");
    exact &= x == 0;
  }
  if (exact) return n;

  const auto kernel = kernel_basis(s);
  const std::size_t M = s.cols();
  // Solve K c + l w = n; then m = K c = n - l w.
  IntMatrix sys(M, kernel.size() + M);
  for (std::size_t j = 0; j < kernel.size(); ++j) {
    for (std::size_t i = 0; i < M; ++i) sys(i, j) = kernel[j][i];
  }
  for (std::size_t i = 0; i < M; ++i) sys(i, kernel.size() + i) = l;
  const auto sol = solve_integer(sys, n);
  if (!sol) {
    return NotLiftable{"no integer kernel vector is congruent to the residue modulo " +
                       std::to_string(l)};
  }
  IntVector m(M, 0);
  for (std::size_t j = 0; j < kernel.size(); ++j) {
    for (std::size_t i = 0; i < M; ++i) m[i] = checked_add(m[i], checked_mul((*sol)[j], kernel[j][i]));
  }
  return m;
}

IntMatrix suffix_submatrix(const IntMatrix& s, std::size_t j) {
  if (!s.is_square() || j > s.rows()) throw BadParameters("suffix_submatrix: bad index");
  std::vector<std::size_t> idx;
  for (std::size_t k = j; k < s.rows(); ++k) idx.push_back(k);
  return s.submatrix(idx, idx);
}

bool coprime_to_elementary_divisors(const IntMatrix& a, Int l) {
  for (Int d : elementary_divisors(a)) {
    if (gcd(d, l) != 1) return false;
  }
  return true;
}

MinorCoprimality minor_coprimality(const IntMatrix& s, Int l) {
  if (!s.is_square()) throw BadParameters("minor_coprimality: matrix is not square");
  if (s.rows() > kMaxMinorDimension) {
    throw TooLarge("minor_coprimality: dimension " + std::to_string(s.rows()) +
                   " exceeds the enumeration bound " + std::to_string(kMaxMinorDimension));
  }
  if (l <= 0) throw BadParameters("minor_coprimality: l must be positive");
  const std::size_t M = s.rows();
  const bool skew = s.is_skew_symmetric();
  for (std::size_t k = 1; k <= M; ++k) {
    const auto subs = subsets(M, k);
    for (std::size_t a = 0; a < subs.size(); ++a) {
      // For skew S the (C, R) minor is (-1)^k times the (R, C) minor.
      for (std::size_t b = skew ? a : 0; b < subs.size(); ++b) {
        const Int mu = determinant(s.submatrix(subs[a], subs[b]));
        if (mu != 0 && gcd(mu, l) != 1) {
          return MinorCoprimality{false, MinorWitness{subs[a], subs[b], mu}};
        }
      }
    }
  }
  return MinorCoprimality{true, std::nullopt};
}

}  // namespace qsolv::intlat
