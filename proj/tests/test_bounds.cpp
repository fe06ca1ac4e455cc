#include <doctest.h>

#include <random>

#include "lieval/bounds.hpp"

using namespace lieval;
using namespace lieval::bounds;
using catalog::Family;
using catalog::GroupId;

namespace {
GroupId gid(Family f, unsigned m, std::uint64_t r) { return GroupId{f, m, r}; }
}  // namespace

TEST_CASE("artin product checks on worked examples") {
  // a = +r, r = 4, m = 2, p = 3: v3((4-1)(16-1)) = 2, bound 3^1 * 5^2 (even r).
  auto rep = check_artin(ArtinKind::PlusR, 4, 2, 3);
  CHECK(rep.valuation == 2);
  CHECK(rep.holds);
  CHECK(rep.applicable);

  // a = r^2, r = 3, m = 2, p = 5: v5((9-1)(81-1)) = 1 <= 4^2 * 4^2.
  rep = check_artin(ArtinKind::RSquared, 3, 2, 5);
  CHECK(rep.valuation == 1);
  CHECK(rep.holds);

  // a = -r, r = 3, m = 3, p = 2: v2(|-4| * 8 * |-28|) = 7.
  rep = check_artin(ArtinKind::MinusR, 3, 3, 2);
  CHECK(rep.valuation == 7);
  CHECK(rep.holds);

  CHECK_THROWS_AS(check_artin(ArtinKind::PlusR, 2, 1, 2), std::domain_error);  // p | r
  CHECK_THROWS_AS(check_artin(ArtinKind::PlusR, 1, 2, 3), std::domain_error);  // r < 2
  CHECK_THROWS_AS(check_artin(ArtinKind::PlusR, 3, 0, 2), std::domain_error);  // m < 1
}

TEST_CASE("artin sweep holds over the full configured grid") {
  SweepConfig cfg;
  cfg.artin_r_max = 16;
  cfg.artin_m_max = 8;
  cfg.p_max = 1000;
  auto res = run_verify(Selector::Artin, cfg);
  CHECK(res.summary.violated == 0);
  CHECK(res.summary.checked > 10000);
}

TEST_CASE("classical order valuations on worked examples") {
  // L(2,7), p = 3: v3(168) = 1, bound (7+1)^6.
  auto rep = check_classical(gid(Family::L, 2, 7), 3);
  CHECK(rep.valuation == 1);
  CHECK(rep.holds);

  // U(4,2), p = 5: v5(25920) = 1.
  rep = check_classical(gid(Family::U, 4, 2), 5);
  CHECK(rep.valuation == 1);
  CHECK(rep.holds);

  // POmega+(8,2), p = 7: 174182400 = 2^12 * 3^5 * 5^2 * 7 * 2... v7 = 1.
  rep = check_classical(gid(Family::POmegaPlus, 4, 2), 7);
  CHECK(rep.valuation == 1);
  CHECK(rep.holds);

  CHECK_THROWS_AS(check_classical(gid(Family::L, 2, 7), 7), std::domain_error);   // p | r
  CHECK_THROWS_AS(check_classical(gid(Family::L, 2, 7), 5), std::domain_error);   // p coprime to |G|
  CHECK_THROWS_AS(check_classical(gid(Family::G2, 0, 3), 2), std::domain_error);  // not classical
  CHECK_THROWS_AS(check_classical(gid(Family::L, 2, 2), 3), std::domain_error);   // invalid group
}

TEST_CASE("exceptional order valuations on worked examples") {
  // Sz(8), p = 13: 29120 = 2^6 * 5 * 7 * 13, v13 = 1 <= 9^30.
  auto rep = check_exceptional(gid(Family::Sz, 0, 8), 13);
  CHECK(rep.valuation == 1);
  CHECK(rep.holds);

  // G2(3), p = 2: 4245696 = 2^6 * 3^6 * 7 * 13, v2 = 6.
  rep = check_exceptional(gid(Family::G2, 0, 3), 2);
  CHECK(rep.valuation == 6);
  CHECK(rep.holds);

  CHECK_THROWS_AS(check_exceptional(gid(Family::L, 2, 7), 3), std::domain_error);
}

TEST_CASE("dimension ratios are exact rationals") {
  auto ratios = check_dim_vs_p(gid(Family::L, 2, 7), 3);
  CHECK(ratios.p_over_dim == Rational(1));           // dim = 3
  CHECK(ratios.family_over_dim == Rational(7, 3));   // r^(m-1) = 7

  ratios = check_dim_vs_p(gid(Family::Sz, 0, 8), 13);
  CHECK(ratios.p_over_dim == Rational(13, 14));      // dim = 14
  CHECK(ratios.family_over_dim == Rational(4, 7));   // r/dim, reduced
}

TEST_CASE("large-p valuation caps") {
  // L(3,2), p = 3: p^2 = 9 >= 3(2^2 - 1) = 9, v3(168) = 1 <= 12.
  auto rep = check_large_p_cap(gid(Family::L, 3, 2), 3);
  CHECK(rep.applicable);
  CHECK(rep.holds);
  CHECK(rep.valuation == 1);

  // Sz(8), p = 13: exceptional, 169 >= 3*7, v13 = 1 <= 60.
  rep = check_large_p_cap(gid(Family::Sz, 0, 8), 13);
  CHECK(rep.applicable);
  CHECK(rep.holds);

  // L(6,2), p = 3: p^2 = 9 < 3(2^5 - 1) = 93: hypothesis fails, no verdict.
  rep = check_large_p_cap(gid(Family::L, 6, 2), 3);
  CHECK_FALSE(rep.applicable);
  CHECK(rep.holds);  // vacuously

  // L(2,7) at p = 2 is Lie type in char 2 via L(3,2): rejected outright.
  CHECK_THROWS_AS(check_large_p_cap(gid(Family::L, 2, 7), 2), std::domain_error);
  // ... and L(3,2) at p = 7 likewise, via the same isomorphism.
  CHECK_THROWS_AS(check_large_p_cap(gid(Family::L, 3, 2), 7), std::domain_error);
}

TEST_CASE("quasisimple ratios on worked examples") {
  CHECK(quasisimple_ratio(gid(Family::L, 2, 7), 3) == Rational(1));  // 1*2/(3-1)
  CHECK(quasisimple_ratio(gid(Family::Alt, 5, 0), 3) == Rational(2));  // 1*2/(2-1)
  CHECK(quasisimple_ratio(gid(Family::Alt, 6, 0), 5) == Rational(4));  // 1*4/(2-1)
  CHECK_THROWS_AS(quasisimple_ratio(gid(Family::L, 2, 7), 2), std::domain_error);
  CHECK_THROWS_AS(quasisimple_ratio(gid(Family::Alt, 5, 0), 2), std::domain_error);
}

TEST_CASE("inline inequalities hold with equality exactly at r = m = 2") {
  auto pair = check_inline_inequalities(2, 2);
  CHECK(pair.power_ok);
  CHECK(pair.linear_ok);
  // (2+1)^2 = 9 = 9*(2^1 - 1)^2 and 2+1 = 3 = 3*(2-1): both are equalities.
  CHECK(ipow(Integer(3), 2) == 9 * ipow(Integer(2) - 1, 2));

  for (std::uint64_t r = 2; r <= 40; ++r)
    for (std::uint64_t m = 2; m <= 40; ++m) {
      auto ok = check_inline_inequalities(r, m);
      CHECK(ok.power_ok);
      CHECK(ok.linear_ok);
    }
}

TEST_CASE("special factorizations are exact polynomial identities") {
  for (std::uint64_t r : {2, 3, 5, 10, 97, 1000, 65536}) {
    auto checks = check_special_factorizations(r);
    CHECK(checks.d4_ok);
    CHECK(checks.f4_ok);
  }
  auto sz = check_special_factorizations(8);
  REQUIRE(sz.suzuki_ok.has_value());
  CHECK(*sz.suzuki_ok);  // with s = 4: (9-4)(9+4) = 65 = 8^2 + 1
  sz = check_special_factorizations(2);
  REQUIRE(sz.suzuki_ok.has_value());
  CHECK(*sz.suzuki_ok);  // with s = 2: (3-2)(3+2) = 5
  CHECK_FALSE(check_special_factorizations(4).suzuki_ok.has_value());
  CHECK_FALSE(check_special_factorizations(7).suzuki_ok.has_value());
}

TEST_CASE("alternating legendre bound on worked examples") {
  // m = 5, p = 5: v5(60) = 1, (p-1) = 4 = m-1: tight.
  auto rep = check_alt_bound(5, 5);
  CHECK(rep.valuation == 1);
  CHECK(rep.holds);

  // m = 8, p = 2: v2(20160) = 6, 6 * 1 <= 7.
  rep = check_alt_bound(8, 2);
  CHECK(rep.valuation == 6);
  CHECK(rep.holds);

  // m = 100, p = 97: v97(100!/2) = 1, 96 <= 99.
  rep = check_alt_bound(100, 97);
  CHECK(rep.valuation == 1);
  CHECK(rep.holds);

  CHECK_THROWS_AS(check_alt_bound(4, 2), std::domain_error);
  CHECK_THROWS_AS(check_alt_bound(8, 6), std::domain_error);
}

TEST_CASE("sweep groups are valid, deduplicated, and canonically ordered") {
  SweepConfig cfg;
  auto groups = sweep_groups(cfg);
  CHECK(groups.size() > 150);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    CHECK_FALSE(catalog::validate(groups[i]).has_value());
    if (i) CHECK(groups[i - 1] < groups[i]);
  }
  // Families with no member of exceptional_r still appear via extras.
  bool has_sz = false, has_ree = false, has_2f4 = false;
  for (const auto& g : groups) {
    has_sz |= g.family == Family::Sz;
    has_ree |= g.family == Family::TwoG2;
    has_2f4 |= g.family == Family::TwoF4;
  }
  CHECK(has_sz);
  CHECK(has_ree);
  CHECK(has_2f4);
}

TEST_CASE("cross-characteristic primes divide the order and avoid r") {
  SweepConfig cfg;
  auto g = gid(Family::L, 2, 7);
  auto ps = cross_characteristic_primes(g, cfg);
  CHECK(ps == std::vector<std::uint64_t>{2, 3});
  for (auto p : ps) CHECK(catalog::order(g) % p == 0);

  g = gid(Family::Sz, 0, 8);
  ps = cross_characteristic_primes(g, cfg);
  CHECK(ps == std::vector<std::uint64_t>{5, 7, 13});
}

TEST_CASE("full verification sweep holds and is deterministic in memory") {
  SweepConfig cfg;
  cfg.p_max = 100;          // keep the unit run snappy
  cfg.inline_r_max = 50;
  cfg.inline_m_max = 50;
  cfg.fact_r_max = 50;
  auto res1 = run_verify(Selector::All, cfg);
  CHECK(res1.summary.violated == 0);
  CHECK(res1.summary.checked > 1000);
  CHECK(res1.summary.checked ==
        res1.summary.held + res1.summary.violated + res1.summary.skipped);

  auto res2 = run_verify(Selector::All, cfg);
  REQUIRE(res1.records.size() == res2.records.size());
  for (std::size_t i = 0; i < res1.records.size(); ++i) {
    CHECK(res1.records[i].kind == res2.records[i].kind);
    CHECK(res1.records[i].group == res2.records[i].group);
    CHECK(res1.records[i].p == res2.records[i].p);
    CHECK(res1.records[i].valuation == res2.records[i].valuation);
  }
}

TEST_CASE("corrupted orders are caught by the valuation sweeps") {
  catalog::testing::corrupt_orders(true);
  SweepConfig cfg;
  cfg.p_max = 1000;  // 997 must stay inside the swept primes
  auto res = run_verify(Selector::Classical, cfg);
  catalog::testing::corrupt_orders(false);
  CHECK(res.summary.violated > 0);
}

TEST_CASE("selectors parse") {
  CHECK(parse_selector("artin") == Selector::Artin);
  CHECK(parse_selector("classical") == Selector::Classical);
  CHECK(parse_selector("exceptional") == Selector::Exceptional);
  CHECK(parse_selector("dim") == Selector::Dim);
  CHECK(parse_selector("largep") == std::nullopt);  // exact names only
  CHECK(parse_selector("large-p") == Selector::LargeP);
  CHECK(parse_selector("inline") == Selector::Inline);
  CHECK(parse_selector("factorizations") == Selector::Factorizations);
  CHECK(parse_selector("alt") == Selector::Alt);
  CHECK(parse_selector("all") == Selector::All);
  CHECK_FALSE(parse_selector("bogus").has_value());
}

TEST_CASE("estimates report exact suprema with canonical witnesses") {
  SweepConfig cfg;  // defaults
  auto estimates = estimate_constants(cfg);
  REQUIRE(estimates.size() == 9);
  auto find = [&](const std::string& q) -> const ConstantEstimate& {
    for (const auto& e : estimates)
      if (e.quantity == q) return e;
    REQUIRE(false);
    return estimates[0];
  };
  CHECK(find("quasisimple_ratio").supremum == Rational(4));
  CHECK(find("quasisimple_ratio").witness == "Alt(6), p=5");
  CHECK(find("inline_prefactor").supremum == Rational(9));
  CHECK(find("inline_prefactor").witness == "r=2, m=2");
  CHECK(find("alt_legendre_tightness").supremum == Rational(1));
  CHECK(find("alt_legendre_tightness").witness == "Alt(5), p=5");
  CHECK(find("classical_exponent_ratio").supremum <= Rational(9));
  CHECK(find("exceptional_exponent_ratio").supremum <= Rational(4));
  CHECK(find("p_over_dim").supremum == Rational(7, 3));
}
