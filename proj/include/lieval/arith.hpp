#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lieval/integer.hpp"

namespace lieval::arith {

// v_p(N): the exponent of the prime p in N.  Nonnegative by construction;
// p^value | N and p^(value+1) does not, which tests assert directly.
using Valuation = std::int64_t;

// Deterministic trial division.  Rejects n beyond 10^12 rather than guess
// (every sweep in this project stays far below that).
bool is_prime(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

struct PrimePower {
  std::uint64_t base = 0;  // prime
  unsigned exp = 0;
};

// r = base^exp with base prime, if r is a prime power >= 2.
std::optional<PrimePower> as_prime_power(std::uint64_t r);

// Throws std::domain_error unless p is prime and n >= 1.
Valuation vp(std::uint64_t p, const Integer& n);

// v_p(m!) via the floor-sum identity (never forms the factorial).
Valuation legendre_factorial_vp(std::uint64_t p, std::uint64_t m);

// v_p(prod_{i=1..m} (a^i - 1)) summed term by term; terms may be negative
// (a < 0), valuations are taken on absolute values.  Requires |a| >= 2 and
// p not dividing a.
Valuation product_vp(std::uint64_t p, std::int64_t a, std::uint64_t m);

Integer factorial(std::uint64_t m);

// |Alt(m)| = m!/2, defined for m >= 5 (the simple range).
Integer alt_order(std::uint64_t m);

}  // namespace lieval::arith
