#pragma once

#include <cstdint>

#include "qsolv/scalar/laurent.hpp"

namespace qsolv::scalar {

/// (n)_{q^s} = (q^{sn} - 1) / (q^s - 1); plain n when s = 0.
QLaurent q_int(std::int64_t n, std::int64_t s);

/// (1)(2)...(n) in the q^s-integers; 1 for n = 0.
QLaurent q_factorial(std::int64_t n, std::int64_t s);

/// (n)! / ((k)! (n-k)!) computed by exact Laurent division.
/// Requires 0 <= k <= n.
QLaurent q_binomial(std::int64_t n, std::int64_t k, std::int64_t s);

}  // namespace qsolv::scalar
