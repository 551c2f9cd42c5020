#pragma once

// Dense univariate polynomials over Z, Q and F_p, the residue fields
// F_p[x]/(phi), phi-adic developments and real-root counting.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monogen/arith.hpp"

namespace monogen {

/// Dense polynomial with coefficients in ascending degree. The zero
/// polynomial is the empty coefficient list; otherwise the leading
/// coefficient is nonzero.
template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }
  static Poly constant(const R& v) { return Poly(std::vector<R>{v}); }
  static Poly monomial(const R& v, std::size_t degree) {
    std::vector<R> c(degree + 1, R(0));
    c[degree] = v;
    return Poly(std::move(c));
  }
  /// x - r
  static Poly linear_root(const R& r) { return Poly(std::vector<R>{R(-r), R(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const R& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  /// Coefficient of x^i, zero beyond the degree.
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const std::vector<R>& coeffs() const { return c_; }

  R operator()(const R& x) const {
    R acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<R> r(std::max(a.c_.size(), b.c_.size()), R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<R> r(std::max(a.c_.size(), b.c_.size()), R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<R> r(a.c_);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const R& s, const Poly& a) {
    std::vector<R> r(a.c_);
    for (auto& v : r) v *= s;
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly pow(unsigned e) const {
    Poly result = constant(R(1));
    Poly base = *this;
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<R> c_;
};

using PolyInt = Poly<Int>;
using PolyRat = Poly<Rat>;

/// Quotient and remainder with f = q*g + r, deg r < deg g. Over Z every
/// step must divide exactly (always true for monic g); otherwise throws
/// MathError. Throws std::domain_error when g is zero.
std::pair<PolyInt, PolyInt> divrem(const PolyInt& f, const PolyInt& g);
std::pair<PolyRat, PolyRat> divrem(const PolyRat& f, const PolyRat& g);

PolyRat to_rat(const PolyInt& f);
/// Exact conversion; throws MathError if a coefficient is not integral.
PolyInt to_int(const PolyRat& f);
/// Clears denominators: returns (F, d) with f = F / d, d > 0 minimal.
std::pair<PolyInt, Int> clear_denominators(const PolyRat& f);
Int content(const PolyInt& f);

/// Minimum p-adic valuation of the coefficients; throws InfiniteValuation
/// for the zero polynomial.
unsigned vp(const PolyInt& f, const Int& p);

/// Resultant via the subresultant PRS on cleared-denominator inputs.
Rat resultant(const PolyRat& f, const PolyRat& g);
/// (-1)^{d(d-1)/2} Res(f, f') / lc(f); requires deg f >= 1.
Rat discriminant(const PolyRat& f);
PolyRat gcd(const PolyRat& f, const PolyRat& g);  // monic, or zero
bool is_squarefree(const PolyRat& f);

/// Number of distinct real roots of a squarefree polynomial (Sturm).
/// Throws MathError when f is not squarefree.
unsigned count_real_roots(const PolyRat& f);

/// Distinct rational roots, increasing.
std::vector<Rat> rational_roots(const PolyInt& f, const Budget& budget = {});

// ---------------------------------------------------------------------------
// F_p[x]

class PolyModP {
 public:
  PolyModP() = default;
  /// Reduces every coefficient into [0, p).
  PolyModP(Int p, const std::vector<Int>& coeffs);
  PolyModP(Int p, std::initializer_list<long> coeffs);
  static PolyModP reduce(const PolyInt& f, const Int& p);
  static PolyModP constant(const Int& p, const Int& v) { return PolyModP(p, std::vector<Int>{v}); }
  static PolyModP x(const Int& p) { return PolyModP(p, std::vector<Int>{Int(0), Int(1)}); }

  const Int& prime() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  const std::vector<Int>& coeffs() const { return c_; }
  /// Least non-negative coefficient lift.
  PolyInt lift() const;

  PolyModP monic() const;
  PolyModP derivative() const;
  Int operator()(const Int& x) const;

  friend PolyModP operator+(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator-(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator*(const Int& s, const PolyModP& a);
  friend bool operator==(const PolyModP& a, const PolyModP& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  /// Ordering used for deterministic factor lists: degree, then coefficients
  /// from the top down.
  friend bool operator<(const PolyModP& a, const PolyModP& b);

 private:
  void normalize();
  Int p_ = 0;
  std::vector<Int> c_;
};

std::pair<PolyModP, PolyModP> divrem(const PolyModP& f, const PolyModP& g);
PolyModP rem(const PolyModP& f, const PolyModP& g);
/// Monic gcd; zero only when both inputs are zero.
PolyModP gcd(const PolyModP& f, const PolyModP& g);
/// Returns (g, s, t) with s*a + t*b = g monic.
struct ExtGcd {
  PolyModP g, s, t;
};
ExtGcd ext_gcd(const PolyModP& a, const PolyModP& b);
/// base^e mod modulus for arbitrary-size e.
PolyModP powmod(const PolyModP& base, const Int& e, const PolyModP& modulus);

struct ModPFactor {
  PolyModP factor;  // monic irreducible
  unsigned exponent;
};

/// Complete factorization of a nonzero polynomial into monic irreducibles,
/// sorted by degree then coefficients. The unit factor is dropped.
std::vector<ModPFactor> factor_mod_p(const PolyModP& f);
/// Rabin's irreducibility test.
bool is_irreducible(const PolyModP& f);

// ---------------------------------------------------------------------------
// F_p[x]/(phi)

/// The finite field F_p[x]/(phi) for a monic irreducible phi.
class ResidueField {
 public:
  explicit ResidueField(PolyModP modulus);

  const PolyModP& modulus() const { return modulus_; }
  const Int& prime() const { return modulus_.prime(); }
  unsigned degree() const { return static_cast<unsigned>(modulus_.degree()); }

  PolyModP reduce(const PolyModP& v) const { return rem(v, modulus_); }
  PolyModP reduce(const PolyInt& v) const { return reduce(PolyModP::reduce(v, prime())); }
  PolyModP zero() const { return PolyModP(prime(), std::vector<Int>{}); }
  PolyModP one() const { return PolyModP::constant(prime(), 1); }
  PolyModP mul(const PolyModP& a, const PolyModP& b) const { return reduce(a * b); }
  PolyModP inverse(const PolyModP& a) const;

 private:
  PolyModP modulus_;
};

/// Element of the residue field; value has degree < deg(modulus).
struct ResidueFieldElem {
  PolyModP value;
};

/// Polynomial over a residue field, ascending coefficients.
using ResiduePoly = std::vector<PolyModP>;

/// Whether gcd(R, R') = 1 over the residue field (R nonconstant).
bool is_separable(const ResidueField& field, const ResiduePoly& r);

// ---------------------------------------------------------------------------
// phi-adic developments

struct PhiDevelopment {
  PolyInt phi;                 // monic
  std::vector<PolyInt> terms;  // a_j, deg a_j < deg phi

  PolyInt reconstruct() const;
};

/// Base-phi expansion of Phi by repeated division. Throws
/// std::invalid_argument for non-monic inputs or constant phi.
PhiDevelopment phi_development(const PolyInt& Phi, const PolyInt& phi);

// ---------------------------------------------------------------------------
// text format: comma-separated ascending coefficients, rationals as num/den

PolyRat parse_poly_rat(const std::string& text);
PolyInt parse_poly_int(const std::string& text);
std::string format_poly(const PolyInt& f);
std::string format_poly(const PolyRat& f);
std::string format_poly(const PolyModP& f);

}  // namespace monogen
