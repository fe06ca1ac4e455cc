#include "lieval/catalog.hpp"

#include <array>
#include <cassert>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "lieval/arith.hpp"

namespace lieval::catalog {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
};

// Parsing tries these in order; longer names first where one is a prefix of
// another (PSp/POmega before P, 2E6 before E6 is not needed since names are
// matched in full up to the '(').
constexpr std::array<FamilyInfo, 17> kFamilies{{
    {Family::L, "L"},
    {Family::U, "U"},
    {Family::PSp, "PSp"},
    {Family::OmegaOdd, "Omega"},
    {Family::POmegaPlus, "POmega+"},
    {Family::POmegaMinus, "POmega-"},
    {Family::G2, "G2"},
    {Family::F4, "F4"},
    {Family::E6, "E6"},
    {Family::TwoE6, "2E6"},
    {Family::E7, "E7"},
    {Family::E8, "E8"},
    {Family::ThreeD4, "3D4"},
    {Family::TwoF4, "2F4"},
    {Family::Sz, "Sz"},
    {Family::TwoG2, "2G2"},
    {Family::Alt, "Alt"},
}};

bool is_odd_power_of(std::uint64_t r, std::uint64_t base) {
  auto pp = arith::as_prime_power(r);
  return pp && pp->base == base && pp->exp % 2 == 1 && pp->exp >= 3;
}

Poly r_minus(unsigned e) { return Poly{{1, e}, {-1, 0}}; }
Poly r_plus(unsigned e) { return Poly{{1, e}, {1, 0}}; }

std::uint64_t parse_number(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("bad number '" + std::string(s) + "' in group name");
  return value;
}

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw std::invalid_argument("cannot parse group '" + std::string(text) + "': " + why);
}

bool corrupt_flag = false;

}  // namespace

namespace testing {
void corrupt_orders(bool enabled) { corrupt_flag = enabled; }
bool orders_corrupted() { return corrupt_flag; }
}  // namespace testing

bool is_classical(Family f) {
  switch (f) {
    case Family::L:
    case Family::U:
    case Family::PSp:
    case Family::OmegaOdd:
    case Family::POmegaPlus:
    case Family::POmegaMinus:
      return true;
    default:
      return false;
  }
}

bool is_exceptional(Family f) { return !is_classical(f) && f != Family::Alt; }

std::string_view family_name(Family f) {
  for (const auto& info : kFamilies)
    if (info.family == f) return info.name;
  return "?";
}

std::optional<std::string> validate(const GroupId& g) {
  auto bad = [&](const std::string& why) {
    return std::optional<std::string>(to_string(g) + ": " + why);
  };
  if (g.family == Family::Alt) {
    if (g.r != 0) return bad("Alt takes no field size");
    if (g.m < 5) return bad("Alt(m) requires m >= 5");
    return std::nullopt;
  }
  auto pp = arith::as_prime_power(g.r);
  if (!pp) return bad("field size must be a prime power >= 2");
  if (is_exceptional(g.family) && g.m != 0) return bad("exceptional families take no rank");
  switch (g.family) {
    case Family::L:
      if (g.m < 2) return bad("L requires dimension >= 2");
      if (g.m == 2 && (g.r == 2 || g.r == 3)) return bad("not simple");
      break;
    case Family::U:
      if (g.m < 3) return bad("U requires dimension >= 3");
      if (g.m == 3 && g.r == 2) return bad("not simple");
      break;
    case Family::PSp:
      if (g.m < 2) return bad("PSp requires dimension >= 4");
      if (g.m == 2 && g.r == 2) return bad("not simple (Sp4(2) ~= Sym(6))");
      break;
    case Family::OmegaOdd:
      if (g.m < 3) return bad("Omega requires dimension >= 7");
      if (g.r % 2 == 0) return bad("Omega requires odd r");
      break;
    case Family::POmegaPlus:
    case Family::POmegaMinus:
      if (g.m < 4) return bad("POmega requires dimension >= 8");
      break;
    case Family::G2:
      if (g.r < 3) return bad("G2 requires r >= 3 (G2(2) is not simple)");
      break;
    case Family::Sz:
    case Family::TwoF4:
      if (!is_odd_power_of(g.r, 2))
        return bad("requires r = 2^(2e+1) with e >= 1");
      break;
    case Family::TwoG2:
      if (!is_odd_power_of(g.r, 3))
        return bad("requires r = 3^(2e+1) with e >= 1");
      break;
    default:
      break;  // F4, E6, 2E6, E7, E8, 3D4: any prime power
  }
  return std::nullopt;
}

void require_valid(const GroupId& g) {
  if (auto why = validate(g)) throw std::domain_error(*why);
}

std::string to_string(const GroupId& g) {
  std::string name(family_name(g.family));
  if (g.family == Family::Alt) return name + "(" + std::to_string(g.m) + ")";
  if (is_exceptional(g.family)) return name + "(" + std::to_string(g.r) + ")";
  unsigned dim = g.m;
  if (g.family == Family::PSp || g.family == Family::POmegaPlus ||
      g.family == Family::POmegaMinus)
    dim = 2 * g.m;
  else if (g.family == Family::OmegaOdd)
    dim = 2 * g.m + 1;
  return name + "(" + std::to_string(dim) + "," + std::to_string(g.r) + ")";
}

GroupId parse_group(std::string_view text) {
  // Group names never contain meaningful whitespace; strip it all up front.
  std::string squeezed;
  squeezed.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) squeezed += c;
  if (squeezed.empty()) parse_fail(text, "empty name");
  std::string_view flat = squeezed;

  auto open = flat.find('(');
  if (open == std::string_view::npos || flat.back() != ')')
    parse_fail(text, "expected NAME(args)");
  std::string_view name = flat.substr(0, open);
  std::string_view args = flat.substr(open + 1, flat.size() - open - 2);

  const FamilyInfo* info = nullptr;
  for (const auto& fi : kFamilies)
    if (fi.name == name) { info = &fi; break; }
  if (!info) parse_fail(text, "unknown family '" + std::string(name) + "'");

  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= args.size()) {
    auto comma = args.find(',', start);
    if (comma == std::string_view::npos) {
      parts.push_back(args.substr(start));
      break;
    }
    parts.push_back(args.substr(start, comma - start));
    start = comma + 1;
  }

  GroupId g;
  g.family = info->family;
  if (g.family == Family::Alt) {
    if (parts.size() != 1) parse_fail(text, "Alt takes one argument");
    std::uint64_t m = parse_number(parts[0]);
    if (m > 1'000'000) parse_fail(text, "degree too large");
    g.m = static_cast<unsigned>(m);
    return g;
  }
  if (is_exceptional(g.family)) {
    if (parts.size() != 1) parse_fail(text, "exceptional families take one argument");
    g.r = parse_number(parts[0]);
    return g;
  }
  if (parts.size() != 2) parse_fail(text, "classical families take (dimension, field)");
  std::uint64_t dim = parse_number(parts[0]);
  g.r = parse_number(parts[1]);
  if (dim == 0 || dim > 10'000) parse_fail(text, "dimension out of range");
  switch (g.family) {
    case Family::L:
    case Family::U:
      g.m = static_cast<unsigned>(dim);
      break;
    case Family::PSp:
    case Family::POmegaPlus:
    case Family::POmegaMinus:
      if (dim % 2 != 0) parse_fail(text, "dimension must be even");
      g.m = static_cast<unsigned>(dim / 2);
      break;
    case Family::OmegaOdd:
      if (dim % 2 != 1) parse_fail(text, "dimension must be odd");
      g.m = static_cast<unsigned>(dim / 2);
      break;
    default:
      break;
  }
  return g;
}

Integer eval_poly(const Poly& poly, std::uint64_t r) {
  Integer sum = 0;
  for (const auto& t : poly) sum += Integer(t.coeff) * ipow(r, t.exp);
  return sum;
}

std::string poly_to_string(const Poly& poly) {
  std::string out;
  bool first = true;
  for (const auto& t : poly) {
    long c = t.coeff;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    long a = c < 0 ? -c : c;
    std::string term;
    if (t.exp == 0) {
      term = std::to_string(a);
    } else {
      if (a != 1) term = std::to_string(a) + "*";
      term += "r";
      if (t.exp != 1) term += "^" + std::to_string(t.exp);
    }
    out += term;
    first = false;
  }
  return out;
}

FactoredOrder factored_order(const GroupId& g) {
  require_valid(g);
  if (g.family == Family::Alt)
    throw std::domain_error("Alt(m) has no field-parametrized factored order");
  FactoredOrder fo;
  const unsigned m = g.m;
  const std::uint64_t r = g.r;
  switch (g.family) {
    case Family::L:
      fo.char_exponent = m * (m - 1) / 2;
      for (unsigned i = 2; i <= m; ++i) fo.factors.push_back(r_minus(i));
      fo.divisor = gcd(Integer(m), Integer(static_cast<unsigned long>(r - 1)));
      break;
    case Family::U:
      fo.char_exponent = m * (m - 1) / 2;
      for (unsigned i = 2; i <= m; ++i)
        fo.factors.push_back(i % 2 == 0 ? r_minus(i) : r_plus(i));
      fo.divisor = gcd(Integer(m), Integer(static_cast<unsigned long>(r + 1)));
      break;
    case Family::PSp:
    case Family::OmegaOdd:
      fo.char_exponent = m * m;
      for (unsigned i = 1; i <= m; ++i) fo.factors.push_back(r_minus(2 * i));
      fo.divisor = gcd(Integer(2), Integer(static_cast<unsigned long>(r - 1)));
      break;
    case Family::POmegaPlus:
    case Family::POmegaMinus: {
      fo.char_exponent = m * (m - 1);
      bool plus = g.family == Family::POmegaPlus;
      fo.factors.push_back(plus ? r_minus(m) : r_plus(m));
      for (unsigned i = 1; i + 1 <= m; ++i) fo.factors.push_back(r_minus(2 * i));
      Integer eps_term = ipow(r, m) + (plus ? -1 : 1);
      fo.divisor = gcd(Integer(4), eps_term);
      break;
    }
    case Family::G2:
      fo.char_exponent = 6;
      fo.factors = {r_minus(2), r_minus(6)};
      break;
    case Family::F4:
      fo.char_exponent = 24;
      fo.factors = {r_minus(2), r_minus(6), r_minus(8), r_minus(12)};
      break;
    case Family::E6:
      fo.char_exponent = 36;
      fo.factors = {r_minus(2), r_minus(5), r_minus(6), r_minus(8), r_minus(9), r_minus(12)};
      fo.divisor = gcd(Integer(3), Integer(static_cast<unsigned long>(r - 1)));
      break;
    case Family::TwoE6:
      fo.char_exponent = 36;
      fo.factors = {r_minus(2), r_plus(5), r_minus(6), r_minus(8), r_plus(9), r_minus(12)};
      fo.divisor = gcd(Integer(3), Integer(static_cast<unsigned long>(r + 1)));
      break;
    case Family::E7:
      fo.char_exponent = 63;
      for (unsigned i : {2, 6, 8, 10, 12, 14, 18}) fo.factors.push_back(r_minus(i));
      fo.divisor = gcd(Integer(2), Integer(static_cast<unsigned long>(r - 1)));
      break;
    case Family::E8:
      fo.char_exponent = 120;
      for (unsigned i : {2, 8, 12, 14, 18, 20, 24, 30}) fo.factors.push_back(r_minus(i));
      break;
    case Family::ThreeD4:
      fo.char_exponent = 12;
      fo.factors = {r_minus(2), Poly{{1, 8}, {1, 4}, {1, 0}}, r_minus(6)};
      break;
    case Family::TwoF4:
      fo.char_exponent = 12;
      fo.factors = {r_minus(1), r_plus(3), r_minus(4), r_plus(6)};
      break;
    case Family::Sz:
      fo.char_exponent = 2;
      fo.factors = {r_minus(1), r_plus(2)};
      break;
    case Family::TwoG2:
      fo.char_exponent = 3;
      fo.factors = {r_minus(1), r_plus(3)};
      break;
    case Family::Alt:
      break;  // unreachable
  }
  return fo;
}

Integer eval_order(const FactoredOrder& fo, std::uint64_t r) {
  Integer n = ipow(r, fo.char_exponent);
  for (const auto& f : fo.factors) n *= eval_poly(f, r);
  return exact_div(n, fo.divisor);
}

Integer order(const GroupId& g) {
  require_valid(g);
  Integer n = g.family == Family::Alt ? arith::alt_order(g.m)
                                      : eval_order(factored_order(g), g.r);
  if (corrupt_flag) n *= ipow(std::uint64_t(997), 50);
  return n;
}

std::vector<Poly> largest_factor_polys(const GroupId& g) {
  require_valid(g);
  const unsigned m = g.m;
  switch (g.family) {
    case Family::L:
      return {m == 2 ? r_minus(2) : r_minus(m)};
    case Family::U:
      return {m % 2 == 0 ? r_minus(m) : r_plus(m)};
    case Family::PSp: {
      std::vector<Poly> out;
      for (unsigned i = 1; i <= m; ++i)
        if (2 * i > m) out.push_back(r_minus(2 * i));
      return out;
    }
    case Family::OmegaOdd:
      return {r_minus(2 * m)};
    case Family::POmegaPlus:
    case Family::POmegaMinus:
      return {r_minus(2 * m - 2)};
    case Family::G2:
      return {r_minus(6)};
    case Family::F4:
    case Family::E6:
    case Family::TwoE6:
      return {r_minus(12)};
    case Family::E7:
      return {r_minus(18)};
    case Family::E8:
      return {r_minus(30)};
    case Family::ThreeD4:
      return {Poly{{1, 8}, {1, 4}, {1, 0}}, r_minus(6)};
    case Family::TwoF4:
      return {r_plus(6)};
    case Family::Sz:
      return {r_plus(2)};
    case Family::TwoG2:
      return {r_plus(3)};
    case Family::Alt:
      throw std::domain_error("Alt(m) has no largest-factor column");
  }
  return {};
}

std::vector<Integer> largest_factors(const GroupId& g) {
  std::vector<Integer> out;
  for (const auto& poly : largest_factor_polys(g)) out.push_back(eval_poly(poly, g.r));
  return out;
}

Integer dim_lower_bound(const GroupId& g) {
  require_valid(g);
  const unsigned m = g.m;
  const std::uint64_t r = g.r;
  auto rpow = [&](unsigned e) { return ipow(r, e); };
  switch (g.family) {
    case Family::Alt:
      return Integer(m >= 7 ? m - 4 : 2);
    case Family::L:
      if (m == 2) return exact_div(Integer(static_cast<unsigned long>(r - 1)),
                                   Integer(r % 2 == 0 ? 1 : 2));
      return rpow(m - 1) - 1;
    case Family::PSp:
      if (r % 2 == 1) return exact_div(rpow(m) - 1, Integer(2));
      return exact_div(rpow(m - 1) * (rpow(m - 1) - 1) * Integer(static_cast<unsigned long>(r - 1)),
                       Integer(2));
    case Family::U:
      if (m % 2 == 1)
        return exact_div(Integer(static_cast<unsigned long>(r)) * (rpow(m - 1) - 1),
                         Integer(static_cast<unsigned long>(r + 1)));
      return exact_div(rpow(m) - 1, Integer(static_cast<unsigned long>(r + 1)));
    case Family::POmegaPlus:
      if (r == 2 || r == 3 || r == 5) return rpow(m - 2) * (rpow(m - 1) - 1);
      return (rpow(m - 1) - 1) * (rpow(m - 2) + 1);
    case Family::POmegaMinus:
      // Single expression for every r (no small-r split in the source table).
      return (rpow(m - 1) + 1) * (rpow(m - 2) - 1);
    case Family::OmegaOdd:
      if (r == 3 || r == 5) return rpow(m - 1) * (rpow(m - 1) - 1);
      return rpow(2 * m - 2) - 1;
    case Family::G2:
      return Integer(static_cast<unsigned long>(r)) * (rpow(2) - 1);
    case Family::F4:
      if (r % 2 == 1) return rpow(6) * (rpow(2) - 1);
      return exact_div(rpow(7) * (rpow(3) - 1) * Integer(static_cast<unsigned long>(r - 1)),
                       Integer(2));
    case Family::E6:
    case Family::TwoE6:
      return rpow(9) * (rpow(2) - 1);
    case Family::E7:
      return rpow(15) * (rpow(2) - 1);
    case Family::E8:
      return rpow(27) * (rpow(2) - 1);
    case Family::ThreeD4:
      return rpow(3) * (rpow(2) - 1);
    case Family::TwoF4:
    case Family::Sz: {
      // r = 2^(2e+1), so sqrt(r/2) = 2^e exactly.
      unsigned e = (arith::as_prime_power(r)->exp - 1) / 2;
      Integer s = ipow(std::uint64_t(2), e);
      Integer base = s * Integer(static_cast<unsigned long>(r - 1));
      return g.family == Family::Sz ? base : rpow(4) * base;
    }
    case Family::TwoG2:
      return Integer(static_cast<unsigned long>(r)) * Integer(static_cast<unsigned long>(r - 1));
  }
  return Integer(0);
}

std::uint64_t defining_characteristic(const GroupId& g) {
  require_valid(g);
  if (g.family == Family::Alt)
    throw std::domain_error("Alt(m) has no defining characteristic");
  return arith::as_prime_power(g.r)->base;
}

unsigned dim_exponent(const GroupId& g) {
  require_valid(g);
  const unsigned m = g.m;
  switch (g.family) {
    case Family::L:
    case Family::U:
      return m - 1;
    case Family::PSp:
      return m;
    case Family::POmegaPlus:
    case Family::POmegaMinus:
      return 2 * m - 3;
    case Family::OmegaOdd:
      return 2 * m - 2;
    case Family::G2:
      return 3;
    case Family::F4:
      return 8;
    case Family::E6:
    case Family::TwoE6:
      return 11;
    case Family::E7:
      return 17;
    case Family::E8:
      return 29;
    case Family::ThreeD4:
    case Family::TwoF4:
      return 5;
    case Family::Sz:
      return 1;
    case Family::TwoG2:
      return 2;
    case Family::Alt:
      throw std::domain_error("Alt(m) has no dimension exponent");
  }
  return 0;
}

}  // namespace lieval::catalog
