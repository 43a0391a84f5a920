#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsolv/intlat/intmatrix.hpp"

namespace qsolv::intlat {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  /// Nonzero diagonal entries of D in order.
  IntVector elementary_divisors() const;
};

SmithForm smith_normal_form(const IntMatrix& a);
IntVector elementary_divisors(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);

/// W^T S W = diag([[0,d_1],[-d_1,0]], ..., [[0,d_r],[-d_r,0]], 0_t).
struct AlternatingForm {
  IntMatrix W;
  IntVector d;
  std::size_t t = 0;

  std::size_t r() const { return d.size(); }
  /// The block-diagonal target matrix built from d and t.
  IntMatrix block_form() const;
};

AlternatingForm alternating_normal_form(const IntMatrix& s);

/// Basis of {n in Z^M : A n = 0}.
std::vector<IntVector> kernel_basis(const IntMatrix& a);

/// Row-style Hermite basis of the lattice spanned by the given vectors.
std::vector<IntVector> hnf_basis(const std::vector<IntVector>& generators, std::size_t dim);

/// Some x in Z^n with A x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Coordinates of v in the given basis, if v lies in the lattice it spans.
std::optional<IntVector> lattice_coordinates(const std::vector<IntVector>& basis,
                                             const IntVector& v);

struct NotLiftable {
  std::string reason;
};

using LiftResult = std::variant<IntVector, NotLiftable>;

/// Lifts a solution n of S n = 0 (mod l) to m with S m = 0 over Z and
/// m = n (mod l).  Throws BadParameters when n is not a solution mod l.
LiftResult solve_and_lift_congruence(const IntMatrix& s, Int l, const IntVector& n);

/// Square submatrix on the indices j, j+1, ..., M-1.
IntMatrix suffix_submatrix(const IntMatrix& s, std::size_t j);

/// gcd(l, d) = 1 for every elementary divisor d of A.
bool coprime_to_elementary_divisors(const IntMatrix& a, Int l);

struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Int value = 0;
};

struct MinorCoprimality {
  bool coprime = true;
  std::optional<MinorWitness> witness;
};

inline constexpr std::size_t kMaxMinorDimension = 12;

/// Checks gcd(l, mu) = 1 for every nonzero minor mu of every size, smallest
/// sizes first.  Throws TooLarge when S exceeds kMaxMinorDimension.
MinorCoprimality minor_coprimality(const IntMatrix& s, Int l);

}  // namespace qsolv::intlat
