#include "monogen/poly.hpp"

#include <algorithm>
#include <sstream>

namespace monogen {

namespace {

template <class R>
std::pair<Poly<R>, Poly<R>> divrem_field(const Poly<R>& f, const Poly<R>& g) {
  if (g.is_zero()) throw std::domain_error("divrem: division by the zero polynomial");
  if (f.degree() < g.degree()) return {Poly<R>(), f};
  std::vector<R> r(f.coeffs());
  std::vector<R> q(static_cast<std::size_t>(f.degree() - g.degree() + 1), R(0));
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    const R& top = r[k + dg];
    if (top == 0) continue;
    R factor = top / g.leading();
    if constexpr (std::is_same_v<R, Int>) {
      if (factor * g.leading() != top) throw MathError("divrem: inexact division over Z");
    }
    q[k] = factor;
    for (std::size_t i = 0; i <= dg; ++i) r[k + i] -= factor * gc[i];
  }
  r.resize(dg);
  return {Poly<R>(std::move(q)), Poly<R>(std::move(r))};
}

// lc(B)^(deg A - deg B + 1) * A mod B, exact over Z.
PolyInt pseudo_rem(const PolyInt& a, const PolyInt& b) {
  std::vector<Int> r(a.coeffs());
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Int& lb = b.leading();
  // one multiplication by lc(B) per step, deg A - deg B + 1 steps in total
  for (int k = a.degree(); k >= db; --k) {
    const Int top = r[k];
    for (auto& v : r) v *= lb;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= top * bc[i];
  }
  r.resize(static_cast<std::size_t>(std::max(db, 0)));
  return PolyInt(std::move(r));
}

PolyInt divide_exact(const PolyInt& f, const Int& d) {
  std::vector<Int> c(f.coeffs());
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return PolyInt(std::move(c));
}

Int resultant_int(PolyInt a, PolyInt b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.degree() == 0) return pow(a.leading(), static_cast<unsigned long>(b.degree()));
  if (b.degree() == 0) return pow(b.leading(), static_cast<unsigned long>(a.degree()));
  const Int ca = content(a);
  const Int cb = content(b);
  a = divide_exact(a, ca);
  b = divide_exact(b, cb);
  const Int t = pow(ca, static_cast<unsigned long>(b.degree())) * pow(cb, static_cast<unsigned long>(a.degree()));
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
  }
  Int g = 1;
  Int h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    PolyInt r = pseudo_rem(a, b);
    a = b;
    if (r.is_zero()) return 0;
    b = divide_exact(r, g * pow(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    if (delta == 0) {
      // h unchanged: h^(1-0) g^0
    } else {
      Int num = pow(g, static_cast<unsigned long>(delta));
      Int den = pow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  Int num = pow(b.leading(), static_cast<unsigned long>(da));
  Int den = pow(h, static_cast<unsigned long>(da - 1));
  Int hh;
  mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * hh;
}

// Positive rescaling to a primitive integer polynomial; keeps signs.
PolyRat normalize_positive(const PolyRat& f) {
  if (f.is_zero()) return f;
  auto [F, d] = clear_denominators(f);
  Int c = content(F);
  return to_rat(divide_exact(F, c));
}

}  // namespace

std::pair<PolyInt, PolyInt> divrem(const PolyInt& f, const PolyInt& g) { return divrem_field(f, g); }
std::pair<PolyRat, PolyRat> divrem(const PolyRat& f, const PolyRat& g) { return divrem_field(f, g); }

PolyRat to_rat(const PolyInt& f) {
  std::vector<Rat> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.emplace_back(v);
  return PolyRat(std::move(c));
}

PolyInt to_int(const PolyRat& f) {
  std::vector<Int> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) {
    if (v.get_den() != 1) throw MathError("polynomial has non-integral coefficient " + to_string(v));
    c.emplace_back(v.get_num());
  }
  return PolyInt(std::move(c));
}

std::pair<PolyInt, Int> clear_denominators(const PolyRat& f) {
  Int d = 1;
  for (const auto& v : f.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Int> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.emplace_back(Int(v.get_num()) * (d / Int(v.get_den())));
  return {PolyInt(std::move(c)), d};
}

Int content(const PolyInt& f) {
  Int g = 0;
  for (const auto& v : f.coeffs()) g = gcd(g, v);
  return g;
}

unsigned vp(const PolyInt& f, const Int& p) {
  if (f.is_zero()) throw InfiniteValuation();
  unsigned best = ~0U;
  for (const auto& v : f.coeffs()) {
    if (v != 0) best = std::min(best, vp(v, p));
  }
  return best;
}

Rat resultant(const PolyRat& f, const PolyRat& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant: zero polynomial");
  auto [F, df] = clear_denominators(f);
  auto [G, dg] = clear_denominators(g);
  Rat r(resultant_int(F, G));
  Rat scale(pow(df, static_cast<unsigned long>(g.degree())) * pow(dg, static_cast<unsigned long>(f.degree())));
  Rat out = r / scale;
  out.canonicalize();
  return out;
}

Rat discriminant(const PolyRat& f) {
  if (f.is_zero()) throw std::domain_error("discriminant: zero polynomial");
  const long d = f.degree();
  if (d < 1) throw std::domain_error("discriminant: constant polynomial");
  if (d == 1) return 1;
  Rat r = resultant(f, f.derivative()) / f.leading();
  if (((d * (d - 1)) / 2) % 2 != 0) r = -r;
  r.canonicalize();
  return r;
}

PolyRat gcd(const PolyRat& f, const PolyRat& g) {
  PolyRat a = f;
  PolyRat b = g;
  while (!b.is_zero()) {
    PolyRat r = divrem(a, b).second;
    a = std::move(b);
    b = normalize_positive(r);
  }
  if (a.is_zero()) return a;
  return Rat(1 / a.leading()) * a;
}

bool is_squarefree(const PolyRat& f) {
  if (f.is_zero()) return false;
  return gcd(f, f.derivative()).degree() == 0;
}

unsigned count_real_roots(const PolyRat& f) {
  if (f.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
  if (f.degree() == 0) return 0;
  if (!is_squarefree(f)) throw MathError("count_real_roots: polynomial is not squarefree");
  std::vector<PolyRat> chain{normalize_positive(f), normalize_positive(f.derivative())};
  while (chain.back().degree() > 0) {
    PolyRat r = divrem(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(normalize_positive(-r));
  }
  auto changes = [&](bool at_plus) {
    unsigned n = 0;
    int prev = 0;
    for (const auto& q : chain) {
      int s = sgn(q.leading());
      if (!at_plus && (q.degree() % 2 != 0)) s = -s;
      if (prev != 0 && s != prev) ++n;
      prev = s;
    }
    return n;
  };
  return changes(false) - changes(true);
}

std::vector<Rat> rational_roots(const PolyInt& f, const Budget& budget) {
  if (f.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  std::vector<Rat> roots;
  std::vector<Int> c(f.coeffs());
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  c.erase(c.begin(), c.begin() + static_cast<long>(shift));
  const PolyInt g(c);
  if (g.degree() >= 1) {
    const auto num = divisors(g.coeff(0), budget);
    const auto den = divisors(g.leading(), budget);
    const PolyRat gr = to_rat(g);
    for (const auto& d : den) {
      for (const auto& n : num) {
        if (gcd(n, d) != 1) continue;
        for (int sign : {1, -1}) {
          Rat r(sign * n, d);
          r.canonicalize();
          if (gr(r) == 0) roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------

PolyModP::PolyModP(Int p, const std::vector<Int>& coeffs) : p_(std::move(p)), c_(coeffs) {
  if (p_ < 2) throw std::invalid_argument("PolyModP: modulus must be a prime");
  normalize();
}

PolyModP::PolyModP(Int p, std::initializer_list<long> coeffs) : p_(std::move(p)) {
  if (p_ < 2) throw std::invalid_argument("PolyModP: modulus must be a prime");
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

PolyModP PolyModP::reduce(const PolyInt& f, const Int& p) { return PolyModP(p, f.coeffs()); }

void PolyModP::normalize() {
  for (auto& v : c_) v = mod(v, p_);
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyInt PolyModP::lift() const { return PolyInt(c_); }

PolyModP PolyModP::monic() const {
  if (is_zero()) return *this;
  return inverse_mod(leading(), p_) * *this;
}

PolyModP PolyModP::derivative() const {
  if (c_.size() <= 1) return PolyModP(p_, std::vector<Int>{});
  std::vector<Int> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return PolyModP(p_, d);
}

Int PolyModP::operator()(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod(acc * x + *it, p_);
  return acc;
}

namespace {
void check_same_field(const PolyModP& a, const PolyModP& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("PolyModP: mismatched primes");
}
}  // namespace

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
  check_same_field(a, b);
  std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return PolyModP(a.p_, r);
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
  check_same_field(a, b);
  std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return PolyModP(a.p_, r);
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return PolyModP(a.p_, std::vector<Int>{});
  std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyModP(a.p_, r);
}

PolyModP operator*(const Int& s, const PolyModP& a) {
  std::vector<Int> r(a.c_);
  for (auto& v : r) v *= s;
  return PolyModP(a.p_, r);
}

bool operator<(const PolyModP& a, const PolyModP& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

std::pair<PolyModP, PolyModP> divrem(const PolyModP& f, const PolyModP& g) {
  check_same_field(f, g);
  if (g.is_zero()) throw std::domain_error("divrem: division by the zero polynomial");
  const Int& p = f.prime();
  if (f.degree() < g.degree()) return {PolyModP(p, std::vector<Int>{}), f};
  std::vector<Int> r(f.coeffs());
  std::vector<Int> q(static_cast<std::size_t>(f.degree() - g.degree() + 1), Int(0));
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  const Int inv = inverse_mod(g.leading(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    Int top = mod(r[k + dg], p);
    if (top == 0) continue;
    Int factor = mod(top * inv, p);
    q[k] = factor;
    for (std::size_t i = 0; i <= dg; ++i) r[k + i] = mod(r[k + i] - factor * gc[i], p);
  }
  r.resize(dg);
  return {PolyModP(p, q), PolyModP(p, r)};
}

PolyModP rem(const PolyModP& f, const PolyModP& g) {
  if (f.degree() < g.degree()) return f;
  return divrem(f, g).second;
}

PolyModP gcd(const PolyModP& f, const PolyModP& g) {
  PolyModP a = f;
  PolyModP b = g;
  while (!b.is_zero()) {
    PolyModP r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd(const PolyModP& a, const PolyModP& b) {
  const Int& p = a.prime();
  PolyModP r0 = a, r1 = b;
  PolyModP s0 = PolyModP::constant(p, 1), s1(p, std::vector<Int>{});
  PolyModP t0(p, std::vector<Int>{}), t1 = PolyModP::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    PolyModP s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    PolyModP t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Int inv = inverse_mod(r0.leading(), p);
  return {inv * r0, inv * s0, inv * t0};
}

PolyModP powmod(const PolyModP& base, const Int& e, const PolyModP& modulus) {
  const Int& p = modulus.prime();
  PolyModP result = rem(PolyModP::constant(p, 1), modulus);
  PolyModP b = rem(base, modulus);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(result * result, modulus);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(result * b, modulus);
  }
  return result;
}

namespace {

PolyModP exact_div(const PolyModP& f, const PolyModP& g) { return divrem(f, g).first; }

std::vector<ModPFactor> squarefree_decomposition(const PolyModP& f) {
  const Int& p = f.prime();
  std::vector<ModPFactor> out;
  if (f.degree() <= 0) return out;
  PolyModP c = gcd(f, f.derivative());
  PolyModP w = exact_div(f, c);
  unsigned i = 1;
  while (!w.is_one()) {
    PolyModP y = gcd(w, c);
    PolyModP z = exact_div(w, y);
    if (!z.is_one()) out.push_back({z, i});
    ++i;
    w = y;
    c = exact_div(c, y);
  }
  if (!c.is_one()) {
    // c is a polynomial in x^p; Frobenius is the identity on F_p coefficients
    const unsigned long pl = p.get_ui();
    std::vector<Int> root;
    for (std::size_t k = 0; k < c.coeffs().size(); k += pl) root.push_back(c.coeffs()[k]);
    for (const auto& [g, e] : squarefree_decomposition(PolyModP(p, root))) {
      out.push_back({g, e * static_cast<unsigned>(pl)});
    }
  }
  return out;
}

std::vector<std::pair<PolyModP, unsigned>> distinct_degree(PolyModP f) {
  const Int& p = f.prime();
  std::vector<std::pair<PolyModP, unsigned>> out;
  const PolyModP x = PolyModP::x(p);
  PolyModP h = rem(x, f);
  unsigned d = 1;
  while (f.degree() >= static_cast<int>(2 * d)) {
    h = powmod(h, p, f);
    PolyModP g = gcd(h - x, f);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = exact_div(f, g);
      h = rem(h, f);
    }
    ++d;
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

void equal_degree(const PolyModP& f, unsigned d, gmp_randclass& rng, std::vector<PolyModP>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const Int& p = f.prime();
  const Int exponent = (pow(p, d) - 1) / 2;
  while (true) {
    std::vector<Int> coeffs(static_cast<std::size_t>(f.degree()));
    for (auto& v : coeffs) v = rng.get_z_range(p);
    PolyModP a(p, coeffs);
    if (a.degree() <= 0) continue;
    PolyModP b;
    if (p == 2) {
      PolyModP t = a;
      b = a;
      for (unsigned i = 1; i < d; ++i) {
        t = rem(t * t, f);
        b = b + t;
      }
    } else {
      b = powmod(a, exponent, f) - PolyModP::constant(p, 1);
    }
    PolyModP g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModPFactor> factor_mod_p(const PolyModP& f) {
  if (f.is_zero()) throw std::domain_error("factor_mod_p: zero polynomial");
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x5eed);
  std::vector<ModPFactor> out;
  for (const auto& [part, mult] : squarefree_decomposition(f.monic())) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<PolyModP> pieces;
      equal_degree(block, d, rng, pieces);
      for (auto& g : pieces) out.push_back({std::move(g), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const ModPFactor& a, const ModPFactor& b) {
    if (a.factor == b.factor) return a.exponent < b.exponent;
    return a.factor < b.factor;
  });
  return out;
}

bool is_irreducible(const PolyModP& f) {
  if (f.degree() <= 0) return false;
  const Int& p = f.prime();
  const PolyModP g = f.monic();
  const unsigned n = static_cast<unsigned>(g.degree());
  const PolyModP x = PolyModP::x(p);
  std::vector<PolyModP> frob{rem(x, g)};  // x^{p^k} mod g
  for (unsigned k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), p, g));
  if (!(frob[n] == rem(x, g))) return false;
  for (const auto& q : factor(n).factors) {
    const unsigned k = n / static_cast<unsigned>(q.prime.get_ui());
    if (!gcd(frob[k] - x, g).is_one()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

ResidueField::ResidueField(PolyModP modulus) : modulus_(std::move(modulus)) {
  if (!modulus_.is_monic() || modulus_.degree() < 1) {
    throw std::invalid_argument("ResidueField: modulus must be monic of positive degree");
  }
}

PolyModP ResidueField::inverse(const PolyModP& a) const {
  ExtGcd e = ext_gcd(reduce(a), modulus_);
  if (!e.g.is_one()) throw MathError("ResidueField: element is not invertible");
  return reduce(e.s);
}

namespace {

void trim(ResiduePoly& r) {
  while (!r.empty() && r.back().is_zero()) r.pop_back();
}

ResiduePoly residue_rem(const ResidueField& field, ResiduePoly a, const ResiduePoly& b) {
  const PolyModP inv = field.inverse(b.back());
  while (a.size() >= b.size()) {
    const PolyModP factor = field.mul(a.back(), inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = field.reduce(a[shift + i] - factor * b[i]);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_separable(const ResidueField& field, const ResiduePoly& r) {
  ResiduePoly a = r;
  trim(a);
  if (a.size() <= 1) return true;
  ResiduePoly d;
  for (std::size_t i = 1; i < a.size(); ++i) {
    d.push_back(field.reduce(Int(static_cast<unsigned long>(i)) * a[i]));
  }
  trim(d);
  if (d.empty()) return false;
  ResiduePoly b = d;
  while (!b.empty()) {
    ResiduePoly t = residue_rem(field, a, b);
    a = std::move(b);
    b = std::move(t);
  }
  return a.size() == 1;
}

// ---------------------------------------------------------------------------

PolyInt PhiDevelopment::reconstruct() const {
  PolyInt acc;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) acc = acc * phi + *it;
  return acc;
}

PhiDevelopment phi_development(const PolyInt& Phi, const PolyInt& phi) {
  if (!Phi.is_monic()) throw std::invalid_argument("phi_development: Phi must be monic");
  if (!phi.is_monic() || phi.degree() < 1) {
    throw std::invalid_argument("phi_development: phi must be monic of positive degree");
  }
  PhiDevelopment dev{phi, {}};
  PolyInt rest = Phi;
  while (!rest.is_zero()) {
    auto [q, r] = divrem(rest, phi);
    dev.terms.push_back(std::move(r));
    rest = std::move(q);
  }
  return dev;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t') {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

template <class R>
std::string join(const std::vector<R>& c) {
  if (c.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out << ',';
    out << c[i].get_str();
  }
  return out.str();
}

}  // namespace

PolyRat parse_poly_rat(const std::string& text) {
  std::vector<Rat> c;
  for (const auto& part : split_commas(text)) c.push_back(parse_rat(part));
  return PolyRat(std::move(c));
}

PolyInt parse_poly_int(const std::string& text) {
  std::vector<Int> c;
  for (const auto& part : split_commas(text)) c.push_back(parse_int(part));
  return PolyInt(std::move(c));
}

std::string format_poly(const PolyInt& f) { return join(f.coeffs()); }
std::string format_poly(const PolyRat& f) { return join(f.coeffs()); }
std::string format_poly(const PolyModP& f) { return join(f.coeffs()); }

}  // namespace monogen
