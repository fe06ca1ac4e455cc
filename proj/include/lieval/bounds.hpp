#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieval/arith.hpp"
#include "lieval/catalog.hpp"
#include "lieval/integer.hpp"

namespace lieval::bounds {

// Stable labels; also the canonical ordering of record kinds in reports.
enum class CheckKind {
  ArtinProduct,        // v_p of prod(a^i - 1) vs the three-case bound
  ClassicalOrder,      // v_p|G| vs (r+1)^(3m) for the six classical families
  ExceptionalOrder,    // v_p|G| vs (r+1)^30 for the ten exceptional families
  TableDivisibility,   // each largest-factor value divides divisor * |G|
  DimFloor,            // dim_lower_bound(g) >= 2
  DimExponent,         // 9*dim >= r^(am+b) classical / 4*dim >= r^a exceptional
  LargePConstant,      // p^2 >= 3(r^(m-1)-1) => v <= 12; p^2 >= 3(r-1) => v <= 60
  InlineInequality,    // (r+1)^m <= 9(r^(m-1)-1)^2 and r+1 <= 3(r-1)
  Factorization,       // the three exact polynomial identities
  AltLegendre,         // v_p(m!/2) * (p-1) <= m-1
};

std::string_view check_kind_label(CheckKind k);

enum class ArtinKind { PlusR, MinusR, RSquared };
std::string_view artin_kind_label(ArtinKind k);

struct BoundReport {
  CheckKind kind = CheckKind::ArtinProduct;
  std::optional<catalog::GroupId> group;   // subject, when group-based
  std::optional<ArtinKind> a_kind;         // subject, for Artin checks
  std::uint64_t r = 0;                     // grid subjects (Artin/inline/alt m)
  std::uint64_t m = 0;
  std::uint64_t p = 0;                     // 0 when the check has no prime
  arith::Valuation valuation = 0;
  std::string bound;                       // formula text the check instantiates
  bool applicable = true;                  // false: hypothesis fails, not a verdict
  bool holds = true;
  double slack = 0.0;                      // report-only ratio (never a verdict)
  // Grid sweeps compress to one summary record; these carry its exact counts.
  std::uint64_t grid_checked = 0;
  std::uint64_t grid_violations = 0;
};

// v_p(prod_{i<=m}(a^i - 1)) against the case bound
//   r even:          p^v <= 3^(m/2) (r+1)^m   (squared-form comparison)
//   r odd, a = +-r:  p^v <= 2^m (r+1)^m
//   r odd, a = r^2:  p^v <= 4^m (r+1)^m
// plus the coarse bound p^v <= (r+1)^(2m); holds = both.  Requires r >= 2,
// m >= 1, p prime with p not dividing r.
BoundReport check_artin(ArtinKind kind, std::uint64_t r, std::uint64_t m, std::uint64_t p);

// Cross-characteristic order valuation bounds; require p | |G| and p not
// dividing r (throws std::domain_error otherwise).
BoundReport check_classical(const catalog::GroupId& g, std::uint64_t p);
BoundReport check_exceptional(const catalog::GroupId& g, std::uint64_t p);

// Exact ratios reported by the dimension-vs-prime comparison: p/dim and
// r^(m-1)/dim (classical) or r/dim (exceptional).
struct DimRatios {
  Rational p_over_dim;
  Rational family_over_dim;
};
DimRatios check_dim_vs_p(const catalog::GroupId& g, std::uint64_t p);

// Large-p valuation caps: when p^2 >= 3(r^(m-1)-1) (classical) or
// p^2 >= 3(r-1) (exceptional), v_p|G| <= 12 resp. 60.  Hypotheses as
// quasisimple_ratio; when the large-p condition fails the report comes back
// applicable = false and counts as skipped.
BoundReport check_large_p_cap(const catalog::GroupId& g, std::uint64_t p);

// v_p(|G|) * (p-1) / (dim_lower_bound(g) - 1), exact.  Requires a valid g
// with p | |G|, p coprime to any defining characteristic of g (via the cp
// characteristic set, so e.g. Alt(5) with p = 2 is rejected).
Rational quasisimple_ratio(const catalog::GroupId& g, std::uint64_t p);

// (r+1)^m <= 9 (r^(m-1) - 1)^2  and  r+1 <= 3(r-1), exact integers.
struct InlinePair {
  bool power_ok = false;
  bool linear_ok = false;
};
InlinePair check_inline_inequalities(std::uint64_t r, std::uint64_t m);

// d4: r^8+r^4+1 = (r^4+r^2+1)(r^4-r^2+1); f4: r^6+1 = (r^2+1)(r^4-r^2+1);
// suzuki (only when r = 2^(2e+1), else nullopt): with s^2 = 2r,
// (r+1-s)(r+1+s) = r^2+1.
struct FactorizationChecks {
  bool d4_ok = false;
  bool f4_ok = false;
  std::optional<bool> suzuki_ok;
};
FactorizationChecks check_special_factorizations(std::uint64_t r);

// v_p(m!/2) * (p-1) <= m-1 for m >= 5.
BoundReport check_alt_bound(std::uint64_t m, std::uint64_t p);

struct SweepConfig {
  std::vector<std::uint64_t> classical_r{2, 3, 4, 5, 7, 8, 9};
  std::vector<std::uint64_t> exceptional_r{2, 3, 4, 5, 7, 8, 9};
  // Families with no candidate in exceptional_r keep a representative sweep.
  std::vector<std::uint64_t> suzuki_extra{8};   // Sz, 2F4
  std::vector<std::uint64_t> ree_extra{27};     // 2G2
  unsigned m_max = 6;
  std::uint64_t p_max = 1000;
  unsigned alt_m_max = 100;
  std::uint64_t artin_r_max = 16;
  unsigned artin_m_max = 8;
  std::uint64_t inline_r_max = 1000;
  unsigned inline_m_max = 1000;
  std::uint64_t fact_r_max = 1000;
  unsigned suzuki_e_max = 10;
  std::uint64_t element_cap = 1'000'000;
  std::uint64_t vertex_cap = 1'000'000;
};

// Every valid Lie-type group in the configured ranges, canonical order.
std::vector<catalog::GroupId> sweep_groups(const SweepConfig& cfg);

// Primes p <= p_max with p | |G| and p coprime to r, ascending.
std::vector<std::uint64_t> cross_characteristic_primes(const catalog::GroupId& g,
                                                       const SweepConfig& cfg);

struct ConstantEstimate {
  std::string quantity;
  Rational supremum;
  std::string witness;  // first attaining subject in canonical order
};

// Empirical suprema over the configured sweep (exact rational comparisons):
//   p_over_dim                  sup p / dim(g)
//   classical_r_power_over_dim  sup r^(m-1) / dim(g), classical g
//   exceptional_r_over_dim      sup r / dim(g), exceptional g
//   quasisimple_ratio           sup v_p|G| (p-1) / (dim(g)-1)
//   inline_prefactor            sup (r+1)^m / (r^(m-1)-1)^2
//   alt_legendre_tightness      sup v_p(m!/2)(p-1) / (m-1)
//   classical_shifted_ratio     sup (r^(m-1)-1) / (dim(g)-1), classical g
//   classical_exponent_ratio    sup r^(am+b) / dim(g)   (prefactor reciprocal)
//   exceptional_exponent_ratio  sup r^a / dim(g)
std::vector<ConstantEstimate> estimate_constants(const SweepConfig& cfg);

enum class Selector { Artin, Classical, Exceptional, Dim, LargeP, Inline, Factorizations, Alt, All };
std::optional<Selector> parse_selector(std::string_view text);

struct VerifySummary {
  std::uint64_t checked = 0;
  std::uint64_t held = 0;
  std::uint64_t violated = 0;
  std::uint64_t skipped = 0;  // inapplicable hypotheses
};

struct VerifyResult {
  std::vector<BoundReport> records;
  VerifySummary summary;
};

// Runs the selected sweeps in canonical order.  Records are per-check for
// group/Artin/Alt sweeps; the inline and factorization grids emit one summary
// record (plus one record per violation).  Summary counts count checks.
VerifyResult run_verify(Selector sel, const SweepConfig& cfg);

}  // namespace lieval::bounds
