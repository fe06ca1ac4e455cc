#include "lieval/cp.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieval::cp {

namespace {

using catalog::Family;
using catalog::GroupId;

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string_view::npos) return "";
  return std::string(s.substr(b, e - b + 1));
}

// Splits on commas at paren depth 0 so X(...) bodies stay intact.
std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

CompositionFactor parse_explicit(const std::string& body) {
  Explicit x;
  bool saw_order = false;
  std::string last_key;
  for (const auto& raw : split_top_level(body)) {
    std::string item = trim(raw);
    auto eq = item.find('=');
    std::string key, value;
    if (eq == std::string::npos) {
      // Continuation of a multi-valued key ("chars=2,3" splits at the comma).
      key = last_key;
      value = item;
    } else {
      key = trim(item.substr(0, eq));
      value = trim(item.substr(eq + 1));
    }
    if (key == "name") {
      x.name = value;
    } else if (key == "order") {
      try {
        x.order = Integer(value, 10);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad explicit order '" + value + "'");
      }
      saw_order = true;
    } else if (key == "chars") {
      if (!value.empty()) {
        if (!all_digits(value))
          throw std::invalid_argument("bad characteristic '" + value + "'");
        x.lie_characteristics.insert(std::stoull(value));
      }
    } else {
      throw std::invalid_argument("unknown explicit key '" + key + "'");
    }
    last_key = key;
  }
  if (x.name.empty() || !saw_order)
    throw std::invalid_argument("explicit factor needs name= and order=");
  return x;
}

}  // namespace

void validate_factor(const CompositionFactor& f) {
  if (const auto* c = std::get_if<Cyclic>(&f)) {
    if (!arith::is_prime(c->ell))
      throw std::domain_error("cyclic factor order must be prime, got " + std::to_string(c->ell));
  } else if (const auto* a = std::get_if<Alternating>(&f)) {
    if (a->m < 5) throw std::domain_error("alternating factor requires m >= 5");
  } else if (const auto* l = std::get_if<LieType>(&f)) {
    catalog::require_valid(l->g);
    if (l->g.family == Family::Alt)
      throw std::domain_error("use Alternating for Alt factors");
  } else if (const auto* x = std::get_if<Explicit>(&f)) {
    if (x->order < 2) throw std::domain_error("explicit factor order must be >= 2");
    for (auto p : x->lie_characteristics)
      if (!arith::is_prime(p))
        throw std::domain_error("explicit characteristic must be prime, got " + std::to_string(p));
  }
}

std::set<std::uint64_t> characteristic_set(const CompositionFactor& f) {
  validate_factor(f);
  if (std::holds_alternative<Cyclic>(f)) return {};
  if (const auto* a = std::get_if<Alternating>(&f)) {
    switch (a->m) {
      case 5: return {2, 5};
      case 6: return {3};
      case 8: return {2};
      default: return {};
    }
  }
  if (const auto* x = std::get_if<Explicit>(&f)) return x->lie_characteristics;

  const GroupId& g = std::get<LieType>(f).g;
  std::set<std::uint64_t> chars{catalog::defining_characteristic(g)};
  const GroupId l24{Family::L, 2, 4}, l25{Family::L, 2, 5};
  const GroupId l27{Family::L, 2, 7}, l32{Family::L, 3, 2};
  const GroupId u42{Family::U, 4, 2}, psp43{Family::PSp, 2, 3};
  if (g == l24) chars.insert(5);   // ~= Alt(5) ~= L(2,5)
  if (g == l25) chars.insert(2);
  if (g == l27) chars.insert(2);   // ~= L(3,2)
  if (g == l32) chars.insert(7);
  if (g == u42) chars.insert(3);   // ~= PSp(4,3)
  if (g == psp43) chars.insert(2);
  return chars;
}

Integer factor_order(const CompositionFactor& f) {
  validate_factor(f);
  if (const auto* c = std::get_if<Cyclic>(&f)) return Integer(static_cast<unsigned long>(c->ell));
  if (const auto* a = std::get_if<Alternating>(&f)) return arith::alt_order(a->m);
  if (const auto* x = std::get_if<Explicit>(&f)) return x->order;
  return catalog::order(std::get<LieType>(f).g);
}

std::int64_t cp_value(const FactorList& fs, std::uint64_t p) {
  if (!arith::is_prime(p)) throw std::domain_error("p must be prime");
  std::int64_t total = 0;
  for (const auto& f : fs) {
    if (characteristic_set(f).count(p)) continue;
    total += arith::vp(p, factor_order(f));
  }
  return total;
}

std::int64_t cp_nonabelian(const FactorList& fs, std::uint64_t p) {
  if (!arith::is_prime(p)) throw std::domain_error("p must be prime");
  std::int64_t total = 0;
  for (const auto& f : fs) {
    if (std::holds_alternative<Cyclic>(f)) continue;
    if (characteristic_set(f).count(p)) continue;
    total += arith::vp(p, factor_order(f));
  }
  return total;
}

FactorList parse_factor_list(std::string_view text) {
  FactorList out;
  for (const auto& raw : split_top_level(text)) {
    std::string term = trim(raw);
    if (term.empty()) throw std::invalid_argument("empty factor in list");
    if (term.size() >= 2 && term[0] == 'C' && all_digits(term.substr(1))) {
      out.push_back(Cyclic{std::stoull(term.substr(1))});
    } else if (term.size() >= 2 && term[0] == 'A' && all_digits(term.substr(1))) {
      out.push_back(Alternating{static_cast<unsigned>(std::stoul(term.substr(1)))});
    } else if (term.rfind("X(", 0) == 0 && term.back() == ')') {
      out.push_back(parse_explicit(term.substr(2, term.size() - 3)));
    } else {
      GroupId g = catalog::parse_group(term);
      if (g.family == Family::Alt)
        out.push_back(Alternating{g.m});
      else
        out.push_back(LieType{g});
    }
    validate_factor(out.back());
  }
  return out;
}

std::string to_string(const CompositionFactor& f) {
  if (const auto* c = std::get_if<Cyclic>(&f)) return "C" + std::to_string(c->ell);
  if (const auto* a = std::get_if<Alternating>(&f)) return "A" + std::to_string(a->m);
  if (const auto* x = std::get_if<Explicit>(&f)) {
    std::string chars;
    for (auto p : x->lie_characteristics) {
      if (!chars.empty()) chars += ",";
      chars += std::to_string(p);
    }
    return "X(name=" + x->name + ", order=" + x->order.get_str() + ", chars=" + chars + ")";
  }
  return catalog::to_string(std::get<LieType>(f).g);
}

std::string to_string(const FactorList& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += ", ";
    out += to_string(f);
  }
  return out;
}

}  // namespace lieval::cp
