#include "lieval/arith.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lieval {

Integer exact_div(const Integer& n, const Integer& d) {
  assert(d != 0 && n % d == 0);
  Integer out;
  mpz_divexact(out.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return out;
}

double log2_integer(const Integer& n) {
  assert(n > 0);
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return static_cast<double>(exp2) + std::log2(mant);
}

Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

double rational_double(const Rational& q) { return q.get_d(); }

}  // namespace lieval

namespace lieval::arith {

namespace {
constexpr std::uint64_t kPrimalityLimit = 1'000'000'000'000ull;
}  // namespace

bool is_prime(std::uint64_t n) {
  if (n > kPrimalityLimit)
    throw std::domain_error("primality check limited to n <= 10^12, got " + std::to_string(n));
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t r) {
  if (r < 2) return std::nullopt;
  std::uint64_t base = r;
  for (std::uint64_t d = 2; d * d <= r; ++d) {
    if (r % d == 0) {
      base = d;
      break;
    }
  }
  unsigned exp = 0;
  std::uint64_t rest = r;
  while (rest % base == 0) {
    rest /= base;
    ++exp;
  }
  if (rest != 1) return std::nullopt;  // second prime divisor
  return PrimePower{base, exp};
}

namespace {

// Valuation of |n| with no precondition checks; callers validated p already.
Valuation vp_abs_unchecked(std::uint64_t p, const Integer& n) {
  assert(n != 0);
  Integer rest, pz(static_cast<unsigned long>(p));
  Integer a = abs(n);
  return static_cast<Valuation>(
      mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t()));
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::domain_error("p must be prime, got " + std::to_string(p));
}

}  // namespace

Valuation vp(std::uint64_t p, const Integer& n) {
  require_prime(p);
  if (n < 1) throw std::domain_error("vp requires n >= 1");
  return vp_abs_unchecked(p, n);
}

Valuation legendre_factorial_vp(std::uint64_t p, std::uint64_t m) {
  require_prime(p);
  Valuation total = 0;
  for (std::uint64_t q = p; q <= m; ) {
    total += static_cast<Valuation>(m / q);
    if (q > m / p) break;  // q*p would overflow past m anyway
    q *= p;
  }
  return total;
}

Valuation product_vp(std::uint64_t p, std::int64_t a, std::uint64_t m) {
  require_prime(p);
  if (a == 0 || a == 1 || a == -1)
    throw std::domain_error("product_vp requires |a| >= 2");
  std::uint64_t abs_a = a < 0 ? static_cast<std::uint64_t>(-a) : static_cast<std::uint64_t>(a);
  if (abs_a % p == 0)
    throw std::domain_error("product_vp requires p not dividing a");
  Valuation total = 0;
  Integer power(1);
  Integer az(static_cast<long>(a));
  for (std::uint64_t i = 1; i <= m; ++i) {
    power *= az;
    total += vp_abs_unchecked(p, power - 1);
  }
  return total;
}

Integer factorial(std::uint64_t m) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), m);
  return out;
}

Integer alt_order(std::uint64_t m) {
  if (m < 5) throw std::domain_error("Alt(m) requires m >= 5");
  return exact_div(factorial(m), Integer(2));
}

}  // namespace lieval::arith
