#include "qsolv/scalar/qnumbers.hpp"

#include "qsolv/errors.hpp"

namespace qsolv::scalar {

QLaurent q_int(std::int64_t n, std::int64_t s) {
  if (s == 0) return QLaurent(static_cast<long>(n));
  QLaurent r;
  if (n >= 0) {
    for (std::int64_t k = 0; k < n; ++k) r += QLaurent::monomial(s * k);
    return r;
  }
  // (q^{sn} - 1)/(q^s - 1) = -q^{sn} (q^{-sn} - 1)/(q^s - 1)
  for (std::int64_t k = 0; k < -n; ++k) r -= QLaurent::monomial(s * n + s * k);
  return r;
}

QLaurent q_factorial(std::int64_t n, std::int64_t s) {
  if (n < 0) throw BadParameters("q_factorial: n must be non-negative");
  QLaurent r(1L);
  for (std::int64_t i = 1; i <= n; ++i) r *= q_int(i, s);
  return r;
}

QLaurent q_binomial(std::int64_t n, std::int64_t k, std::int64_t s) {
  if (k < 0 || k > n) throw BadParameters("q_binomial: requires 0 <= k <= n");
  try {
    return divide_exact(q_factorial(n, s), q_factorial(k, s) * q_factorial(n - k, s));
  } catch (const NotDivisible& e) {
    // The factorial ratio is always a Laurent polynomial.
    throw std::logic_error(std::string("q_binomial: internal failure: ") + e.what());
  }
}

}  // namespace qsolv::scalar
