#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {
namespace {

// ---- F_9 = F_3[i], i^2 = -1; element a + 3b encodes a + b*i ----

constexpr unsigned f9_add(unsigned x, unsigned y) {
  return (x % 3 + y % 3) % 3 + 3 * ((x / 3 + y / 3) % 3);
}

constexpr unsigned f9_mul(unsigned x, unsigned y) {
  unsigned a = x % 3, b = x / 3, c = y % 3, d = y / 3;
  unsigned re = (a * c + 2 * b * d) % 3;  // ac - bd
  unsigned im = (a * d + b * c) % 3;
  return re + 3 * im;
}

constexpr unsigned f9_conj(unsigned x) { return x % 3 + 3 * ((3 - x / 3) % 3); }

using Vec3 = std::array<unsigned, 3>;

// Hermitian inner product <u,v> = sum conj(u_i) v_i over F_9.
unsigned herm(const Vec3& u, const Vec3& v) {
  unsigned s = 0;
  for (int i = 0; i < 3; ++i) s = f9_add(s, f9_mul(f9_conj(u[i]), v[i]));
  return s;
}

Vec3 f9_vec(unsigned code) {
  return {code % 9, (code / 9) % 9, code / 81};
}

// ---- F_3^4 symplectic form B(x,y) = x1 y3 - x3 y1 + x2 y4 - x4 y2 ----

using Vec4 = std::array<unsigned, 4>;

unsigned symp(const Vec4& x, const Vec4& y) {
  unsigned s = x[0] * y[2] + 2 * x[2] * y[0] + x[1] * y[3] + 2 * x[3] * y[1];
  return s % 3;
}

Vec4 f3_vec4(unsigned code) {
  return {code % 3, (code / 3) % 3, (code / 9) % 3, code / 27};
}

}  // namespace

std::uint64_t psl2_order(std::uint64_t q) {
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) throw std::invalid_argument("psl2_order needs prime q");
  std::uint64_t sl = 0;
  for (std::uint64_t a = 0; a < q; ++a)
    for (std::uint64_t b = 0; b < q; ++b)
      for (std::uint64_t c = 0; c < q; ++c)
        for (std::uint64_t d = 0; d < q; ++d)
          if ((a * d + q * q - b * c) % q == 1) ++sl;
  std::uint64_t center = q == 2 ? 1 : 2;  // {+-I}
  return sl / center;
}

std::uint64_t gl3_f2_order() {
  std::uint64_t count = 0;
  for (unsigned bits = 0; bits < 512; ++bits) {
    unsigned m[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = (bits >> (3 * i + j)) & 1;
    // Cofactor expansion mod 2, written out explicitly.
    unsigned d0 = m[1][1] * m[2][2] ^ m[1][2] * m[2][1];
    unsigned d1 = m[1][0] * m[2][2] ^ m[1][2] * m[2][0];
    unsigned d2 = m[1][0] * m[2][1] ^ m[1][1] * m[2][0];
    unsigned det = (m[0][0] * d0 ^ m[0][1] * d1 ^ m[0][2] * d2) & 1;
    if (det) ++count;
  }
  return count;
}

std::uint64_t psu3_f3_order() {
  std::vector<Vec3> unit;  // vectors of Hermitian norm 1
  for (unsigned code = 0; code < 729; ++code) {
    Vec3 v = f9_vec(code);
    if (herm(v, v) == 1) unit.push_back(v);
  }
  std::uint64_t gu = 0;
  for (const Vec3& c1 : unit)
    for (const Vec3& c2 : unit) {
      if (herm(c1, c2) != 0) continue;
      for (const Vec3& c3 : unit)
        if (herm(c1, c3) == 0 && herm(c2, c3) == 0) ++gu;
    }
  // |GU(3,3)| -> |SU| = |GU|/(q+1) -> |PSU| = |SU|/gcd(3, q+1).
  return gu / 4 / std::gcd<std::uint64_t>(3, 4);
}

std::uint64_t psp4_f3_order() {
  std::vector<Vec4> all;
  for (unsigned code = 0; code < 81; ++code) all.push_back(f3_vec4(code));
  std::uint64_t sp = 0;
  for (const Vec4& c1 : all)
    for (const Vec4& c3 : all) {
      if (symp(c1, c3) != 1) continue;
      for (const Vec4& c2 : all) {
        if (symp(c1, c2) != 0 || symp(c2, c3) != 0) continue;
        for (const Vec4& c4 : all)
          if (symp(c1, c4) == 0 && symp(c3, c4) == 0 && symp(c2, c4) == 1) ++sp;
      }
    }
  return sp / 2;  // center {+-I}
}

std::uint64_t alt_order_scan(unsigned m) {
  if (m < 1 || m > 9) throw std::invalid_argument("alt_order_scan needs 1 <= m <= 9");
  std::vector<unsigned> perm(m);
  std::iota(perm.begin(), perm.end(), 0u);
  std::uint64_t even = 0;
  do {
    unsigned inversions = 0;
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) ++inversions;
    if (inversions % 2 == 0) ++even;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return even;
}

}  // namespace oracle
