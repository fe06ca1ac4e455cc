#include "lieval/affine.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "lieval/arith.hpp"

namespace lieval::affine {

namespace {

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

struct MatKeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = v.size();
    for (auto x : v) h = h * 1000003u + x;
    return h;
  }
};

std::vector<std::uint32_t> apply(const Mat& g, const std::vector<std::uint32_t>& v,
                                 std::uint64_t p) {
  std::vector<std::uint32_t> out(g.n);
  for (unsigned i = 0; i < g.n; ++i) {
    std::uint64_t acc = 0;
    for (unsigned j = 0; j < g.n; ++j) acc += std::uint64_t(g.at(i, j)) * v[j];
    out[i] = static_cast<std::uint32_t>(acc % p);
  }
  return out;
}

}  // namespace

Mat Mat::identity(unsigned n) {
  Mat m;
  m.n = n;
  m.a.assign(std::size_t(n) * n, 0);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Mat& x, const Mat& y, std::uint64_t p) {
  assert(x.n == y.n);
  Mat out;
  out.n = x.n;
  out.a.assign(std::size_t(x.n) * x.n, 0);
  for (unsigned i = 0; i < x.n; ++i) {
    for (unsigned k = 0; k < x.n; ++k) {
      std::uint64_t xv = x.at(i, k);
      if (!xv) continue;
      for (unsigned j = 0; j < x.n; ++j)
        out.at(i, j) = static_cast<std::uint32_t>((out.at(i, j) + xv * y.at(k, j)) % p);
    }
  }
  return out;
}

bool invertible_mod_p(const Mat& x, std::uint64_t p) {
  // Gaussian elimination over the field F_p.
  Mat w = x;
  unsigned n = w.n;
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = n;
    for (unsigned row = col; row < n; ++row)
      if (w.at(row, col) != 0) { pivot = row; break; }
    if (pivot == n) return false;
    if (pivot != col)
      for (unsigned j = 0; j < n; ++j) std::swap(w.at(pivot, j), w.at(col, j));
    // Scale pivot row to 1 via Fermat inverse.
    std::uint64_t inv = 1, base = w.at(col, col) % p, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (unsigned j = 0; j < n; ++j)
      w.at(col, j) = static_cast<std::uint32_t>(w.at(col, j) * inv % p);
    for (unsigned row = 0; row < n; ++row) {
      if (row == col) continue;
      std::uint64_t f = w.at(row, col);
      if (!f) continue;
      for (unsigned j = 0; j < n; ++j)
        w.at(row, j) =
            static_cast<std::uint32_t>((w.at(row, j) + (p - f) * w.at(col, j)) % p);
    }
  }
  return true;
}

void validate_spec(const MatrixGroupSpec& spec) {
  if (!arith::is_prime(spec.p))
    throw std::domain_error("spec field size must be prime, got " + std::to_string(spec.p));
  if (spec.n == 0) throw std::domain_error("spec dimension must be >= 1");
  double size = std::pow(static_cast<double>(spec.p), static_cast<double>(spec.n));
  if (size > static_cast<double>(spec.vertex_cap))
    throw std::domain_error("p^n exceeds the vertex cap of " + std::to_string(spec.vertex_cap));
  for (const auto& g : spec.generators) {
    if (g.n != spec.n || g.a.size() != std::size_t(spec.n) * spec.n)
      throw std::domain_error("generator has wrong shape");
    for (auto e : g.a)
      if (e >= spec.p) throw std::domain_error("generator entry out of range [0, p)");
    if (!invertible_mod_p(g, spec.p))
      throw std::domain_error("generator is singular mod p");
  }
}

MatrixGroupSpec parse_spec(std::istream& in) {
  MatrixGroupSpec spec;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    if (!have_header) {
      std::uint64_t p;
      unsigned n;
      if (!(row >> p >> n)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;  // blank
        throw std::invalid_argument("spec header must be 'p n'");
      }
      std::string rest;
      if (row >> rest) throw std::invalid_argument("spec header must be 'p n'");
      spec.p = p;
      spec.n = n;
      have_header = true;
      continue;
    }
    std::vector<std::uint32_t> entries;
    std::uint64_t e;
    while (row >> e) entries.push_back(static_cast<std::uint32_t>(e));
    if (entries.empty()) continue;
    if (entries.size() != std::size_t(spec.n) * spec.n)
      throw std::invalid_argument("generator line needs n*n entries");
    Mat g;
    g.n = spec.n;
    g.a = std::move(entries);
    spec.generators.push_back(std::move(g));
  }
  if (!have_header) throw std::invalid_argument("spec file is empty");
  validate_spec(spec);
  return spec;
}

MatrixGroupSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file '" + path + "'");
  return parse_spec(in);
}

ClosureResult closure(const MatrixGroupSpec& spec, std::uint64_t element_cap) {
  validate_spec(spec);
  ClosureResult res;
  std::unordered_set<std::vector<std::uint32_t>, MatKeyHash> seen;
  std::deque<Mat> queue;
  Mat id = Mat::identity(spec.n);
  seen.insert(id.a);
  res.elements.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Mat cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : spec.generators) {
      Mat next = mat_mul(cur, g, spec.p);
      if (seen.insert(next.a).second) {
        if (res.elements.size() >= element_cap) {
          res.cap_exceeded = true;
          return res;
        }
        res.elements.push_back(next);
        queue.push_back(next);
      }
    }
  }
  return res;
}

namespace {

// Row-echelon basis over F_p supporting incremental inserts.
class Span {
 public:
  Span(std::uint64_t p, unsigned n) : p_(p), n_(n) {}

  unsigned dim() const { return static_cast<unsigned>(rows_.size()); }

  // Reduces v against the basis; if independent, inserts and returns true.
  bool insert(std::vector<std::uint32_t> v) {
    for (const auto& row : rows_) {
      std::uint64_t f = v[pivot_of(row)];
      if (f) subtract(v, row, f);
    }
    unsigned lead = n_;
    for (unsigned j = 0; j < n_; ++j)
      if (v[j]) { lead = j; break; }
    if (lead == n_) return false;
    normalize(v, lead);
    rows_.push_back(std::move(v));
    std::sort(rows_.begin(), rows_.end(), [this](const auto& a, const auto& b) {
      return pivot_of(a) < pivot_of(b);
    });
    return true;
  }

 private:
  unsigned pivot_of(const std::vector<std::uint32_t>& row) const {
    for (unsigned j = 0; j < n_; ++j)
      if (row[j]) return j;
    return n_;
  }
  void subtract(std::vector<std::uint32_t>& v, const std::vector<std::uint32_t>& row,
                std::uint64_t f) const {
    for (unsigned j = 0; j < n_; ++j)
      v[j] = static_cast<std::uint32_t>((v[j] + (p_ - f) * row[j]) % p_);
  }
  void normalize(std::vector<std::uint32_t>& v, unsigned lead) const {
    std::uint64_t inv = 1, base = v[lead], e = p_ - 2;
    while (e) {
      if (e & 1) inv = inv * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    for (unsigned j = 0; j < n_; ++j)
      v[j] = static_cast<std::uint32_t>(v[j] * inv % p_);
  }

  std::uint64_t p_;
  unsigned n_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

bool spin_is_full(const MatrixGroupSpec& spec, const std::vector<std::uint32_t>& seed) {
  Span span(spec.p, spec.n);
  std::vector<std::vector<std::uint32_t>> work{seed};
  span.insert(seed);
  while (!work.empty()) {
    if (span.dim() == spec.n) return true;
    auto v = std::move(work.back());
    work.pop_back();
    for (const auto& g : spec.generators) {
      auto u = apply(g, v, spec.p);
      if (span.insert(u)) work.push_back(std::move(u));
    }
  }
  return span.dim() == spec.n;
}

}  // namespace

bool is_irreducible(const MatrixGroupSpec& spec) {
  validate_spec(spec);
  if (spec.n == 1) return true;
  // spin(v) is constant on H-orbits (invariance under the generators of a
  // finite group is invariance under the group), so one representative per
  // orbit covers every nonzero vector exactly.
  for (const auto& orbit : orbits_on_nonzero(spec)) {
    if (!spin_is_full(spec, decode_vec(orbit.front(), spec.p, spec.n))) return false;
  }
  return true;
}

std::vector<std::uint32_t> decode_vec(Code c, std::uint64_t p, unsigned n) {
  std::vector<std::uint32_t> v(n);
  for (unsigned i = 0; i < n; ++i) {
    v[i] = static_cast<std::uint32_t>(c % p);
    c = static_cast<Code>(c / p);
  }
  return v;
}

Code encode_vec(const std::vector<std::uint32_t>& v, std::uint64_t p) {
  std::uint64_t c = 0;
  for (unsigned i = static_cast<unsigned>(v.size()); i-- > 0;) c = c * p + v[i];
  return static_cast<Code>(c);
}

std::vector<std::vector<Code>> orbits_on_nonzero(const MatrixGroupSpec& spec) {
  validate_spec(spec);
  const std::uint64_t total = pow_u64(spec.p, spec.n);
  std::vector<bool> visited(total, false);
  std::vector<std::vector<Code>> orbits;
  for (Code start = 1; start < total; ++start) {
    if (visited[start]) continue;
    std::vector<Code> orbit{start};
    visited[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      auto v = decode_vec(orbit[head], spec.p, spec.n);
      for (const auto& g : spec.generators) {
        Code img = encode_vec(apply(g, v, spec.p), spec.p);
        if (!visited[img]) {
          visited[img] = true;
          orbit.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::optional<unsigned> orbital_diameter(const MatrixGroupSpec& spec,
                                         const std::vector<Code>& orbit, bool undirected) {
  validate_spec(spec);
  if (orbit.empty()) throw std::domain_error("orbit must be nonempty");
  const std::uint64_t total = pow_u64(spec.p, spec.n);
  std::unordered_set<Code> members(orbit.begin(), orbit.end());
  for (Code c : orbit) {
    if (c == 0 || c >= total) throw std::domain_error("orbit contains an invalid vertex");
    auto v = decode_vec(c, spec.p, spec.n);
    for (const auto& g : spec.generators)
      if (!members.count(encode_vec(apply(g, v, spec.p), spec.p)))
        throw std::domain_error("orbit is not closed under the generators");
  }

  // Step vectors as digit arrays; undirected mode also walks the negatives.
  std::vector<std::vector<std::uint32_t>> steps;
  for (Code c : orbit) steps.push_back(decode_vec(c, spec.p, spec.n));
  if (undirected) {
    for (Code c : orbit) {
      auto v = decode_vec(c, spec.p, spec.n);
      for (auto& d : v) d = static_cast<std::uint32_t>((spec.p - d) % spec.p);
      Code neg = encode_vec(v, spec.p);
      if (!members.count(neg)) steps.push_back(std::move(v));
    }
  }

  // BFS from 0; eccentricity of 0 equals the diameter by translation
  // symmetry.  Early exit once every vertex is discovered.
  std::vector<int> level(total, -1);
  std::vector<Code> frontier{0};
  level[0] = 0;
  std::uint64_t found = 1;
  unsigned depth = 0;
  while (!frontier.empty() && found < total) {
    std::vector<Code> next;
    ++depth;
    for (Code u : frontier) {
      auto uv = decode_vec(u, spec.p, spec.n);
      for (const auto& s : steps) {
        std::uint64_t c = 0;
        for (unsigned i = spec.n; i-- > 0;) {
          std::uint32_t d = uv[i] + s[i] >= spec.p ? uv[i] + s[i] - static_cast<std::uint32_t>(spec.p)
                                                   : uv[i] + s[i];
          c = c * spec.p + d;
        }
        Code w = static_cast<Code>(c);
        if (level[w] < 0) {
          level[w] = static_cast<int>(depth);
          next.push_back(w);
          ++found;
        }
      }
      if (found == total) break;
    }
    frontier = std::move(next);
  }
  if (found < total) return std::nullopt;
  return depth;
}

OrbitalResult check_bounds(const MatrixGroupSpec& spec, const std::vector<Code>& orbit,
                           std::optional<std::int64_t> cp_value, bool also_undirected) {
  OrbitalResult res;
  res.representative = *std::min_element(orbit.begin(), orbit.end());
  res.orbit_size = orbit.size();
  res.diameter = orbital_diameter(spec, orbit, false);
  if (also_undirected) res.undirected_diameter = orbital_diameter(spec, orbit, true);
  std::uint64_t limit = (spec.p - 1) * spec.n;
  res.diameter_bound_holds = res.diameter.has_value() && *res.diameter <= limit;
  if (cp_value && *cp_value >= 1 && res.diameter) {
    res.cp_diameter_ratio =
        make_rational(Integer(static_cast<unsigned long>(*res.diameter)) *
                          static_cast<unsigned long>(*cp_value),
                      Integer(static_cast<unsigned long>(spec.n)) * spec.n);
  }
  return res;
}

}  // namespace lieval::affine
