#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lieval/arith.hpp"
#include "lieval/catalog.hpp"

namespace lieval::cp {

struct Cyclic {
  std::uint64_t ell = 2;  // prime
};

struct Alternating {
  unsigned m = 5;  // >= 5
};

struct LieType {
  catalog::GroupId g;
};

// Escape hatch for factors outside the catalog (sporadic groups, Tits group):
// the caller declares the order and the Lie characteristics to exclude.
struct Explicit {
  std::string name;
  Integer order = 1;
  std::set<std::uint64_t> lie_characteristics;
};

using CompositionFactor = std::variant<Cyclic, Alternating, LieType, Explicit>;
using FactorList = std::vector<CompositionFactor>;

void validate_factor(const CompositionFactor& f);  // throws std::domain_error

// Primes p such that the factor is (isomorphic to) a Lie-type group in
// characteristic p.  Includes the exceptional-isomorphism coincidences:
//   Alt(5) ~= L(2,4) ~= L(2,5)      -> {2,5}
//   Alt(6) ~= L(2,9)                -> {3}    (single-table convention)
//   Alt(8) ~= L(4,2)                -> {2}
//   L(2,7) ~= L(3,2)                -> {7,2}
//   U(4,2) ~= PSp(4,3)              -> {2,3}
// 2G2(3) is not a valid GroupId (its derived group L(2,8) is, with {2}).
std::set<std::uint64_t> characteristic_set(const CompositionFactor& f);

Integer factor_order(const CompositionFactor& f);

// Sum of v_p(|factor|) over factors that are NOT Lie type in characteristic p.
std::int64_t cp_value(const FactorList& fs, std::uint64_t p);

// Same, additionally ignoring cyclic factors.
std::int64_t cp_nonabelian(const FactorList& fs, std::uint64_t p);

// Comma-separated terms: "C2, C2, A5, L(2,7), X(name=M11, order=7920, chars=)".
// Cn = cyclic of prime order n; An = alternating; X(...) = explicit with
// key=value entries (chars holds comma-separated primes); anything else uses
// the group-name grammar of the catalog (Alt(5) is accepted as A5).
FactorList parse_factor_list(std::string_view text);  // throws std::invalid_argument

std::string to_string(const CompositionFactor& f);
std::string to_string(const FactorList& fs);

}  // namespace lieval::cp
