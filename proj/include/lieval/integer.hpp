#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lieval {

// All order formulas and bound comparisons run on exact integers; floating
// point never decides a verdict (doubles appear only in reporting fields).
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Integer ipow(std::uint64_t base, unsigned long exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

// Exact quotient; the caller promises divisibility (asserted in debug builds).
Integer exact_div(const Integer& n, const Integer& d);

// log2 of a positive integer, for report-only slack ratios.
double log2_integer(const Integer& n);

Rational make_rational(const Integer& num, const Integer& den);

// "4/7" for non-integers, plain "9" for integers.
std::string rational_str(const Rational& q);
double rational_double(const Rational& q);

}  // namespace lieval
