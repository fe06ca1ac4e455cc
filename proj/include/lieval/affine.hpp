#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lieval/integer.hpp"

namespace lieval::affine {

// Square matrix over F_p, entries in [0, p), row-major.
struct Mat {
  unsigned n = 0;
  std::vector<std::uint32_t> a;  // n*n entries

  static Mat identity(unsigned n);
  std::uint32_t at(unsigned i, unsigned j) const { return a[i * n + j]; }
  std::uint32_t& at(unsigned i, unsigned j) { return a[i * n + j]; }
  friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mat_mul(const Mat& x, const Mat& y, std::uint64_t p);
bool invertible_mod_p(const Mat& x, std::uint64_t p);

// A subgroup H <= GL(n, p) given by generators.  Vertices of the derived
// graphs are F_p^n encoded as sum v_i p^i, so p^n must stay within the cap.
struct MatrixGroupSpec {
  std::uint64_t p = 2;  // prime
  unsigned n = 1;
  std::vector<Mat> generators;  // may be empty (trivial group)
  std::uint64_t vertex_cap = 1'000'000;
};

void validate_spec(const MatrixGroupSpec& spec);  // throws std::domain_error

// Text format: first non-comment line "p n", then one generator per line as
// n*n entries row-major ('#' starts a comment).
MatrixGroupSpec parse_spec(std::istream& in);
MatrixGroupSpec parse_spec_file(const std::string& path);

struct ClosureResult {
  std::vector<Mat> elements;  // discovery order from the identity
  bool cap_exceeded = false;  // hit element_cap; elements is a partial set
};

ClosureResult closure(const MatrixGroupSpec& spec, std::uint64_t element_cap);

// Exhaustive spinning: for one vector per H-orbit on nonzero vectors, the
// span of its orbit must be the whole space (spans are constant along an
// orbit).  Exact; dimension 1 is trivially irreducible.
bool is_irreducible(const MatrixGroupSpec& spec);

using Code = std::uint32_t;  // encoded vector, < p^n <= vertex cap

std::vector<std::uint32_t> decode_vec(Code c, std::uint64_t p, unsigned n);
Code encode_vec(const std::vector<std::uint32_t>& v, std::uint64_t p);

// Orbits of H on the nonzero vectors, each sorted ascending, ordered by
// their minimal element.  Computed from generator action alone (H itself is
// never enumerated here).
std::vector<std::vector<Code>> orbits_on_nonzero(const MatrixGroupSpec& spec);

// Eccentricity of 0 in the digraph with arcs u -> u+s for s in orbit, which
// by translation-invariance equals the diameter.  nullopt = not strongly
// connected (cannot happen when H is irreducible).  The orbit must be a
// union-free single H-orbit of nonzero vectors (validated).  undirected adds
// the reversed arcs (steps from -orbit too).
std::optional<unsigned> orbital_diameter(const MatrixGroupSpec& spec,
                                         const std::vector<Code>& orbit,
                                         bool undirected = false);

struct OrbitalResult {
  Code representative = 0;  // minimal encoded vertex of the orbit
  std::uint64_t orbit_size = 0;
  std::optional<unsigned> diameter;             // directed
  std::optional<unsigned> undirected_diameter;  // only when requested
  bool diameter_bound_holds = false;                  // diameter <= (p-1) * n
  std::optional<Rational> cp_diameter_ratio;      // diameter * cp / n^2
};

OrbitalResult check_bounds(const MatrixGroupSpec& spec, const std::vector<Code>& orbit,
                           std::optional<std::int64_t> cp_value,
                           bool also_undirected = false);

}  // namespace lieval::affine
