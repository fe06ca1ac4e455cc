#include <doctest.h>

#include <random>
#include <sstream>

#include "lieval/affine.hpp"

using namespace lieval;
using namespace lieval::affine;

namespace {

MatrixGroupSpec make_spec(std::uint64_t p, unsigned n,
                          std::vector<std::vector<std::uint32_t>> gens) {
  MatrixGroupSpec spec;
  spec.p = p;
  spec.n = n;
  for (auto& g : gens) {
    Mat m;
    m.n = n;
    m.a = std::move(g);
    spec.generators.push_back(std::move(m));
  }
  return spec;
}

}  // namespace

TEST_CASE("matrix arithmetic mod p") {
  Mat a = make_spec(5, 2, {{1, 2, 3, 4}}).generators[0];
  Mat b = make_spec(5, 2, {{0, 1, 1, 0}}).generators[0];
  Mat ab = mat_mul(a, b, 5);
  CHECK(ab.a == std::vector<std::uint32_t>{2, 1, 4, 3});
  CHECK(mat_mul(a, Mat::identity(2), 5) == a);

  CHECK(invertible_mod_p(a, 5));   // det = 4 - 6 = -2
  Mat sing = make_spec(5, 2, {{1, 2, 2, 4}}).generators[0];
  CHECK_FALSE(invertible_mod_p(sing, 5));
  CHECK(invertible_mod_p(Mat::identity(3), 2));
}

TEST_CASE("spec validation") {
  CHECK_NOTHROW(validate_spec(make_spec(3, 2, {{0, 2, 1, 0}})));
  CHECK_THROWS_AS(validate_spec(make_spec(4, 2, {{1, 0, 0, 1}})), std::domain_error);  // p not prime
  CHECK_THROWS_AS(validate_spec(make_spec(3, 2, {{0, 3, 1, 0}})), std::domain_error);  // entry >= p
  CHECK_THROWS_AS(validate_spec(make_spec(5, 2, {{1, 2, 2, 4}})), std::domain_error);  // singular
  auto big = make_spec(2, 21, {});  // 2^21 over the default cap
  CHECK_THROWS_AS(validate_spec(big), std::domain_error);
  CHECK_THROWS_AS(validate_spec(make_spec(3, 0, {})), std::domain_error);
}

TEST_CASE("spec files parse with comments") {
  std::istringstream in(
      "# two generators over F_3^2\n"
      "3 2\n"
      "0 2 1 0\n"
      "1 0 0 2  # trailing comment\n");
  auto spec = parse_spec(in);
  CHECK(spec.p == 3);
  CHECK(spec.n == 2);
  REQUIRE(spec.generators.size() == 2);
  CHECK(spec.generators[0].a == std::vector<std::uint32_t>{0, 2, 1, 0});
  CHECK(spec.generators[1].a == std::vector<std::uint32_t>{1, 0, 0, 2});

  std::istringstream bad("3 2\n0 2 1\n");
  CHECK_THROWS_AS(parse_spec(bad), std::invalid_argument);
  std::istringstream empty("");
  CHECK_THROWS_AS(parse_spec(empty), std::invalid_argument);
}

TEST_CASE("vector codes round-trip") {
  for (std::uint32_t c = 0; c < 25; ++c)
    CHECK(encode_vec(decode_vec(c, 5, 2), 5) == c);
  CHECK(decode_vec(7, 5, 2) == std::vector<std::uint32_t>{2, 1});
  CHECK(encode_vec({2, 1}, 5) == 7);
}

TEST_CASE("closure enumerates the generated matrix group") {
  // <[[0,2],[1,0]]> over F_3: M^2 = 2I, M^4 = I.
  auto spec = make_spec(3, 2, {{0, 2, 1, 0}});
  auto res = closure(spec, 1000);
  CHECK_FALSE(res.cap_exceeded);
  CHECK(res.elements.size() == 4);

  // S = [[0,-1],[1,0]] and T = [[1,1],[0,1]] generate SL(2,3), order 24.
  auto sl23 = make_spec(3, 2, {{1, 1, 0, 1}, {0, 2, 1, 0}});
  CHECK(closure(sl23, 1000).elements.size() == 24);

  // Adding diag(2,1) (det 2) extends it to GL(2,3), order 48.
  auto gl23 = make_spec(3, 2, {{1, 1, 0, 1}, {0, 2, 1, 0}, {2, 0, 0, 1}});
  CHECK(closure(gl23, 1000).elements.size() == 48);

  // Trivial group: no generators.
  auto triv = make_spec(5, 1, {});
  CHECK(closure(triv, 10).elements.size() == 1);

  // Cap kicks in.
  CHECK(closure(gl23, 10).cap_exceeded);
  CHECK(closure(sl23, 10).cap_exceeded);
}

TEST_CASE("irreducibility by spinning orbit representatives") {
  // Rotation-like matrix: irreducible over F_3 (no eigenvector in F_3).
  CHECK(is_irreducible(make_spec(3, 2, {{0, 2, 1, 0}})));
  // Diagonal group fixes the axes: reducible.
  CHECK_FALSE(is_irreducible(make_spec(3, 2, {{2, 0, 0, 1}})));
  // Upper triangular fixes a line: reducible.
  CHECK_FALSE(is_irreducible(make_spec(3, 2, {{1, 1, 0, 1}})));
  // Any group in dimension 1 is irreducible.
  CHECK(is_irreducible(make_spec(7, 1, {{3}})));
  // Companion matrix of x^3 + x + 1 (irreducible over F_2).
  CHECK(is_irreducible(make_spec(2, 3, {{0, 0, 1, 1, 0, 1, 0, 1, 0}})));
  // Identity only: reducible for n > 1.
  CHECK_FALSE(is_irreducible(make_spec(3, 2, {})));
}

TEST_CASE("orbits partition the nonzero vectors") {
  // <2> <= F_5^*: single orbit {1,2,3,4}.
  auto spec = make_spec(5, 1, {{2}});
  auto orbits = orbits_on_nonzero(spec);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0] == std::vector<Code>{1, 2, 3, 4});

  // <4> <= F_5^*: orbits {1,4} and {2,3}.
  spec = make_spec(5, 1, {{4}});
  orbits = orbits_on_nonzero(spec);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0] == std::vector<Code>{1, 4});
  CHECK(orbits[1] == std::vector<Code>{2, 3});

  // Trivial group on F_5: four singletons.
  spec = make_spec(5, 1, {});
  orbits = orbits_on_nonzero(spec);
  REQUIRE(orbits.size() == 4);
  CHECK(orbits[2] == std::vector<Code>{3});

  // Rotation-like group on F_3^2: two orbits of size 4.
  spec = make_spec(3, 2, {{0, 2, 1, 0}});
  orbits = orbits_on_nonzero(spec);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].size() == 4);
  CHECK(orbits[1].size() == 4);
  std::size_t total = 0;
  for (const auto& o : orbits) total += o.size();
  CHECK(total == 8);
}

TEST_CASE("orbit sizes divide the group order") {
  std::mt19937 rng(13579);
  for (int trial = 0; trial < 20; ++trial) {
    std::uint64_t p = (trial % 2) ? 3 : 5;
    unsigned n = 2;
    // Random invertible generators.
    std::vector<std::vector<std::uint32_t>> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<std::uint32_t> entries(n * n);
      Mat m;
      do {
        for (auto& e : entries) e = rng() % p;
        m.n = n;
        m.a = entries;
      } while (!invertible_mod_p(m, p));
      gens.push_back(entries);
    }
    auto spec = make_spec(p, n, std::move(gens));
    auto res = closure(spec, 100000);
    REQUIRE_FALSE(res.cap_exceeded);
    for (const auto& orbit : orbits_on_nonzero(spec))
      CHECK(res.elements.size() % orbit.size() == 0);
  }
}

TEST_CASE("orbital diameters on hand-checked graphs") {
  // <2> on F_5: connection set {1,2,3,4} reaches everything in one step.
  auto spec = make_spec(5, 1, {{2}});
  auto orbit = orbits_on_nonzero(spec)[0];
  CHECK(orbital_diameter(spec, orbit) == 1);

  // <4> on F_5: S = {1,4}: 0->1->2 gives 2, all vertices within 2.
  spec = make_spec(5, 1, {{4}});
  orbit = orbits_on_nonzero(spec)[0];
  CHECK(orbital_diameter(spec, orbit) == 2);

  // Trivial group on F_5: S = {1}, a directed cycle: diameter 4.
  spec = make_spec(5, 1, {});
  orbit = orbits_on_nonzero(spec)[0];
  REQUIRE(orbit == std::vector<Code>{1});
  CHECK(orbital_diameter(spec, orbit) == 4);
  // Undirected variant adds -1: diameter 2.
  CHECK(orbital_diameter(spec, orbit, true) == 2);

  // Rotation-like group on F_3^2: S = {(1,0),(0,1),(2,0),(0,2)}: diameter 2.
  spec = make_spec(3, 2, {{0, 2, 1, 0}});
  for (const auto& o : orbits_on_nonzero(spec))
    CHECK(orbital_diameter(spec, o) == 2);

  // A singleton orbit under a scalar group in F_7 with S = {1}: cycle.
  spec = make_spec(7, 1, {});
  CHECK(orbital_diameter(spec, {1}) == 6);
  CHECK(orbital_diameter(spec, {3}).has_value());  // gcd(3,7)=1: still connected

  // Orbit must be closed under the generators.
  spec = make_spec(5, 1, {{2}});
  CHECK_THROWS_AS(orbital_diameter(spec, {1, 2}), std::domain_error);
  CHECK_THROWS_AS(orbital_diameter(spec, {0}), std::domain_error);
}

TEST_CASE("negating the connection set preserves the diameter") {
  // diam(-S) = diam(S) because x -> -x is a digraph isomorphism.
  std::mt19937 rng(8642);
  for (int trial = 0; trial < 10; ++trial) {
    std::uint64_t p = 7;
    auto spec = make_spec(p, 1, {{static_cast<std::uint32_t>(2 + rng() % 4)}});
    auto orbits = orbits_on_nonzero(spec);
    for (const auto& orbit : orbits) {
      // -orbit is also an orbit (negation commutes with the action).
      std::vector<Code> neg;
      for (Code c : orbit) neg.push_back(static_cast<Code>((p - c) % p));
      std::sort(neg.begin(), neg.end());
      bool found = false;
      for (const auto& other : orbits)
        if (other == neg) {
          found = true;
          CHECK(orbital_diameter(spec, orbit) == orbital_diameter(spec, other));
        }
      CHECK(found);
    }
  }
}

TEST_CASE("bound reports carry ratios and the diameter bound") {
  auto spec = make_spec(3, 2, {{0, 2, 1, 0}});
  auto orbits = orbits_on_nonzero(spec);
  auto result = check_bounds(spec, orbits[0], std::int64_t{1}, true);
  CHECK(result.representative == orbits[0][0]);
  CHECK(result.orbit_size == 4);
  CHECK(result.diameter == 2);
  CHECK(result.undirected_diameter == 2);
  CHECK(result.diameter_bound_holds);  // 2 <= (3-1)*2
  REQUIRE(result.cp_diameter_ratio.has_value());
  CHECK(*result.cp_diameter_ratio == Rational(1, 2));  // diam * cp / n^2

  auto no_cp = check_bounds(spec, orbits[0], std::nullopt, false);
  CHECK_FALSE(no_cp.cp_diameter_ratio.has_value());
  CHECK_FALSE(no_cp.undirected_diameter.has_value());
}

TEST_CASE("reducible actions can have disconnected orbitals") {
  // Diagonal group <diag(2,1)> on F_5^2: orbit of (1,0) is {(1,0),(2,0),(3,0),(4,0)},
  // steps never change the second coordinate: not strongly connected.
  auto spec = make_spec(5, 2, {{2, 0, 0, 1}});
  auto orbits = orbits_on_nonzero(spec);
  bool saw_disconnected = false;
  for (const auto& orbit : orbits)
    if (!orbital_diameter(spec, orbit).has_value()) saw_disconnected = true;
  CHECK(saw_disconnected);
}
