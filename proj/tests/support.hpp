#pragma once

// Generators and brute-force oracles shared by the test binaries.

#include <algorithm>
#include <random>

#include "monogen/elliptic.hpp"

namespace testing {

using monogen::Int;
using monogen::PolyInt;
using monogen::PolyModP;
using monogen::PolyRat;
using monogen::Rat;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  Int integer(long lo, long hi) { return Int(range(lo, hi)); }
  Int nonzero(long bound) {
    long v = 0;
    while (v == 0) v = range(-bound, bound);
    return Int(v);
  }
  Rat rational(long bound) {
    Rat r(integer(-bound, bound), Int(range(1, bound)));
    r.canonicalize();
    return r;
  }
  Rat nonzero_rational(long bound) {
    Rat r = 0;
    while (r == 0) r = rational(bound);
    return r;
  }
  /// coprime (alpha, beta) with beta != 0 and a nonsingular Tate curve
  std::pair<Int, Int> tate_parameters(long bound) {
    for (;;) {
      const Int alpha = integer(-bound, bound);
      const Int beta = nonzero(bound);
      if (monogen::gcd(alpha, beta) == 1 && alpha != 8 * beta && alpha != -8 * beta) return {alpha, beta};
    }
  }

 private:
  std::mt19937_64 gen_;
};

/// Determinant over Q by Gaussian elimination.
inline Rat determinant(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

/// Resultant as the determinant of the Sylvester matrix.
inline Rat sylvester_resultant(const PolyRat& f, const PolyRat& g) {
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const std::size_t n = static_cast<std::size_t>(g.degree());
  std::vector<std::vector<Rat>> s(m + n, std::vector<Rat>(m + n, Rat(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f.coeff(m - i);
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(n - i);
  }
  return determinant(s);
}

/// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f), via the Sylvester matrix.
inline Rat sylvester_discriminant(const PolyRat& f) {
  const long d = f.degree();
  Rat r = sylvester_resultant(f, f.derivative()) / f.leading();
  return (d * (d - 1) / 2) % 2 == 1 ? Rat(-r) : r;
}

/// Norm of g(theta) for a root theta of monic f: determinant of
/// multiplication by g in the basis 1, theta, ..., theta^{d-1}.
inline Rat norm_by_matrix(const PolyRat& f, const PolyRat& g) {
  const std::size_t d = static_cast<std::size_t>(f.degree());
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d, Rat(0)));
  for (std::size_t j = 0; j < d; ++j) {
    const PolyRat image = monogen::divrem(g * PolyRat::monomial(Rat(1), j), f).second;
    for (std::size_t i = 0; i < d; ++i) m[i][j] = image.coeff(i);
  }
  return determinant(m);
}

/// All monic polynomials of degree d over F_p (p^d of them).
inline std::vector<PolyModP> monic_polys(const Int& p, unsigned d) {
  const long pl = p.get_si();
  long count = 1;
  for (unsigned i = 0; i < d; ++i) count *= pl;
  std::vector<PolyModP> out;
  for (long k = 0; k < count; ++k) {
    std::vector<Int> c(d + 1);
    long rest = k;
    for (unsigned i = 0; i < d; ++i) {
      c[i] = rest % pl;
      rest /= pl;
    }
    c[d] = 1;
    out.emplace_back(p, c);
  }
  return out;
}

/// Irreducibility by trial division with every monic polynomial of degree
/// at most deg/2.
inline bool brute_irreducible(const PolyModP& f) {
  if (f.degree() < 1) return false;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()); ++d) {
    for (const auto& g : monic_polys(f.prime(), d)) {
      if (monogen::rem(f, g).is_zero()) return false;
    }
  }
  return true;
}

// Random monic Phi that is likely to have repeated factors mod p: a product
// of powers of small monic factors plus a multiple of p.
inline PolyInt random_corpus_poly(Rng& rng, const Int& p) {
  PolyInt f = PolyInt::constant(Int(1));
  const long target = rng.range(2, 6);
  while (f.degree() < target) {
    const long d = rng.range(1, std::min<long>(2, target - f.degree()));
    std::vector<Int> c;
    for (long i = 0; i < d; ++i) c.push_back(rng.integer(-4, 4));
    c.push_back(1);
    f *= PolyInt(c);
  }
  std::vector<Int> noise;
  for (long i = 0; i < f.degree(); ++i) noise.push_back(rng.integer(-3, 3) * monogen::pow(p, static_cast<unsigned long>(rng.range(1, 3))));
  return f + PolyInt(noise);
}

/// Affine points with exact arithmetic on a general Weierstrass curve.
struct Point {
  bool infinity = true;
  Rat x, y;
};

inline Point negate(const monogen::WeierstrassCurve& e, const Point& p) {
  if (p.infinity) return p;
  return {false, p.x, -p.y - e.a1 * p.x - e.a3};
}

inline Point add(const monogen::WeierstrassCurve& e, const Point& p, const Point& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  Rat lambda;
  if (p.x == q.x) {
    const Point np = negate(e, p);
    if (np.y == q.y) return {};
    lambda = (3 * p.x * p.x + 2 * e.a2 * p.x + e.a4 - e.a1 * p.y) / (2 * p.y + e.a1 * p.x + e.a3);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  const Rat nu = p.y - lambda * p.x;
  Point r;
  r.infinity = false;
  r.x = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
  r.y = -(lambda + e.a1) * r.x - nu - e.a3;
  r.x.canonicalize();
  r.y.canonicalize();
  return r;
}

inline Point multiply(const monogen::WeierstrassCurve& e, unsigned n, const Point& p) {
  Point r;
  for (unsigned i = 0; i < n; ++i) r = add(e, r, p);
  return r;
}

inline bool on_curve(const monogen::WeierstrassCurve& e, const Point& p) {
  return p.y * p.y + e.a1 * p.x * p.y + e.a3 * p.y == p.x * p.x * p.x + e.a2 * p.x * p.x + e.a4 * p.x + e.a6;
}

}  // namespace testing
