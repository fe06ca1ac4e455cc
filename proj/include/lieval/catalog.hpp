#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieval/integer.hpp"

namespace lieval::catalog {

// Declaration order is the canonical sort order used by every report.
enum class Family {
  L, U, PSp, OmegaOdd, POmegaPlus, POmegaMinus,
  G2, F4, E6, TwoE6, E7, E8, ThreeD4, TwoF4, Sz, TwoG2,
  Alt,
};

bool is_classical(Family f);    // L, U, PSp, OmegaOdd, POmegaPlus, POmegaMinus
bool is_exceptional(Family f);  // G2..TwoG2
std::string_view family_name(Family f);  // text form, e.g. "POmega+"

// A finite simple group.  m is the rank parameter (subscript convention:
// L_m, U_m, PSp_{2m}, Omega_{2m+1}, POmega+-_{2m}, Alt_m) and is 0 for the
// exceptional families; r is the field size and is 0 for Alt.
struct GroupId {
  Family family = Family::L;
  unsigned m = 0;
  std::uint64_t r = 0;

  friend auto operator<=>(const GroupId&, const GroupId&) = default;
};

// nullopt when g names a finite simple group; otherwise the rejection reason
// (bad rank floor, bad field constraint, or a nonsimple combination such as
// L(2,2), L(2,3), U(3,2), PSp(4,2)).
std::optional<std::string> validate(const GroupId& g);
void require_valid(const GroupId& g);  // throws std::domain_error with the reason

// Text grammar, natural dimension: "L(3,4)", "PSp(4,3)" (so m = 2),
// "Omega(7,3)", "POmega+(8,2)", "G2(4)", "2E6(2)", "Sz(8)", "Alt(7)".
// to_string/parse_group round-trip bit-exactly.
std::string to_string(const GroupId& g);
GroupId parse_group(std::string_view text);  // throws std::invalid_argument

// Sparse polynomial in r: sum of coeff * r^exp terms.
struct Term {
  long coeff;
  unsigned exp;
};
using Poly = std::vector<Term>;

Integer eval_poly(const Poly& poly, std::uint64_t r);
std::string poly_to_string(const Poly& poly);  // e.g. "r^8 + r^4 + 1"

// |G| = r^char_exponent * prod(factors evaluated at r) / divisor, exactly.
struct FactoredOrder {
  unsigned char_exponent = 0;
  std::vector<Poly> factors;
  Integer divisor = 1;
};

// Lie-type groups only (Alt has no field parameter); validates g first.
FactoredOrder factored_order(const GroupId& g);

Integer eval_order(const FactoredOrder& fo, std::uint64_t r);

// Exact order of the simple group (isogeny-free convention: this is the
// order of the simple quotient, never of a covering group).
Integer order(const GroupId& g);

// The largest-cyclotomic-content column: for each listed polynomial f,
// f(r) divides divisor * |G|.  Lie-type only.
std::vector<Integer> largest_factors(const GroupId& g);
std::vector<Poly> largest_factor_polys(const GroupId& g);

// Lower bound for the dimension of a nontrivial projective representation
// in cross characteristic; >= 2 for every valid group.
Integer dim_lower_bound(const GroupId& g);

// Unique prime dividing r.  Lie-type only.
std::uint64_t defining_characteristic(const GroupId& g);

// Exponent e(g) with dim_lower_bound(g) >= r^e(g)/9 (classical, e = am+b)
// or >= r^e(g)/4 (exceptional, e depends only on the family).
unsigned dim_exponent(const GroupId& g);

namespace testing {
// Test fixture: multiplies every computed order by a large prime power so
// the valuation sweeps must report violations.  Never set in production.
void corrupt_orders(bool enabled);
bool orders_corrupted();
}  // namespace testing

}  // namespace lieval::catalog
