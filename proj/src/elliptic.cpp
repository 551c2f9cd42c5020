#include "monogen/elliptic.hpp"

#include <mutex>

namespace monogen {

namespace detail {

// Division-polynomial style sequence with the square of the n = 2 term
// eliminated: odd entries are plain polynomials, even entries hold the
// cofactor of the n = 2 term. `alternating` selects the Fueter signs.
class DivisionCache {
 public:
  DivisionCache(PolyRat square, PolyRat third, PolyRat fourth, bool alternating, unsigned cap)
      : square_(std::move(square)), alternating_(alternating), cap_(cap) {
    const PolyRat one = PolyRat::constant(1);
    table_ = {PolyRat(), one, one, std::move(third), std::move(fourth)};
  }

  PolyRat get(unsigned n) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (n < table_.size()) return table_[n];
    if (n <= cap_) {
      extend(table_, n);
      return table_[n];
    }
    std::vector<PolyRat> local = table_;
    extend(local, n);
    return local[n];
  }

 private:
  void extend(std::vector<PolyRat>& t, unsigned n) const {
    const PolyRat square2 = square_ * square_;
    while (t.size() <= n) {
      const unsigned N = static_cast<unsigned>(t.size());
      PolyRat val;
      if (N % 2 == 1) {
        const unsigned m = (N - 1) / 2;
        if (m % 2 == 0) {
          val = square2 * t[m + 2] * t[m].pow(3) - t[m - 1] * t[m + 1].pow(3);
        } else {
          val = t[m + 2] * t[m].pow(3) - square2 * t[m - 1] * t[m + 1].pow(3);
        }
        if (alternating_ && (m + 1) % 2 == 1) val = -val;
      } else {
        const unsigned m = N / 2;
        // the square of the n = 2 term cancels for either parity of m
        val = t[m] * (t[m + 2] * t[m - 1] * t[m - 1] - t[m - 2] * t[m + 1] * t[m + 1]);
        if (alternating_ && m % 2 == 1) val = -val;
      }
      t.push_back(std::move(val));
    }
  }

  std::mutex mutex_;
  PolyRat square_;
  bool alternating_;
  unsigned cap_;
  std::vector<PolyRat> table_;
};

}  // namespace detail

WeierstrassCurve WeierstrassCurve::from_a_invariants(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4,
                                                     const Rat& a6, unsigned memo_cap) {
  WeierstrassCurve e;
  e.a1 = a1;
  e.a2 = a2;
  e.a3 = a3;
  e.a4 = a4;
  e.a6 = a6;
  e.b2 = a1 * a1 + 4 * a2;
  e.b4 = 2 * a4 + a1 * a3;
  e.b6 = a3 * a3 + 4 * a6;
  e.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  e.delta = -e.b2 * e.b2 * e.b8 - 8 * e.b4 * e.b4 * e.b4 - 27 * e.b6 * e.b6 + 9 * e.b2 * e.b4 * e.b6;
  if (e.delta == 0) throw MathError("singular curve: discriminant is zero");
  const Rat c4 = e.b2 * e.b2 - 24 * e.b4;
  e.j = c4 * c4 * c4 / e.delta;
  e.j.canonicalize();

  const Rat& b2 = e.b2;
  const Rat& b4 = e.b4;
  const Rat& b6 = e.b6;
  const Rat& b8 = e.b8;
  PolyRat third{b8, 3 * b6, 3 * b4, b2, Rat(3)};
  PolyRat fourth{b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, Rat(2)};
  e.cache = std::make_shared<detail::DivisionCache>(e.psi2_squared(), std::move(third), std::move(fourth), false,
                                                    memo_cap);
  return e;
}

PolyRat WeierstrassCurve::psi2_squared() const { return PolyRat{b6, 2 * b4, b2, Rat(4)}; }

PolyRat FueterCurve::f2_squared() const { return PolyRat{Rat(4), c, Rat(4)}; }

TateNormalCurve tate_curve(const Int& alpha, const Int& beta, unsigned memo_cap) {
  if (gcd(alpha, beta) != 1) {
    throw MathError("tate_curve: alpha and beta must be coprime (got " + to_string(alpha) + ", " + to_string(beta) +
                    ")");
  }
  TateNormalCurve t;
  t.alpha = alpha;
  t.beta = beta;
  t.a = alpha + 8 * beta;
  const Rat a(t.a);
  const Rat b(beta);
  t.weierstrass = WeierstrassCurve::from_a_invariants(a, b * a, b * a * a, 0, 0, memo_cap);

  t.fueter.alpha = alpha;
  t.fueter.beta = beta;
  t.fueter.c = Rat(alpha, beta);
  t.fueter.c.canonicalize();
  const Rat& c = t.fueter.c;
  PolyRat third{Rat(-3), Rat(-c), Rat(-6), Rat(0), Rat(1)};
  PolyRat fourth{Rat(-2), Rat(-c), Rat(-10), Rat(0), Rat(10), c, Rat(2)};
  t.fueter.cache = std::make_shared<detail::DivisionCache>(t.fueter.f2_squared(), std::move(third), std::move(fourth),
                                                           true, memo_cap);
  return t;
}

Rat T_to_x(const Rat& T, const TateNormalCurve& curve) {
  if (T == 0) throw MathError("T_to_x: T = 0 is the identity of the Fueter model");
  const Rat ab(curve.a * curve.beta);
  Rat x = ab / T - ab;
  x.canonicalize();
  return x;
}

Rat x_to_T(const Rat& x, const TateNormalCurve& curve) {
  const Rat ab(curve.a * curve.beta);
  if (x + ab == 0) throw MathError("x_to_T: x = -a*beta has no finite T");
  Rat T = ab / (x + ab);
  T.canonicalize();
  return T;
}

DivisionPoly psi(const WeierstrassCurve& curve, unsigned n) {
  if (n == 0) throw std::invalid_argument("psi: n must be positive");
  DivisionPoly d;
  d.n = n;
  d.even_part = n % 2 == 0;
  d.poly = curve.cache->get(n);
  return d;
}

DivisionPoly fueter(const FueterCurve& curve, unsigned n) {
  if (n == 0) throw std::invalid_argument("fueter: n must be positive");
  DivisionPoly d;
  d.n = n;
  d.even_part = n % 2 == 0;
  PolyRat raw = curve.cache->get(n);
  if (d.even_part) {
    d.scale = Rat(n, 2);
    d.scale.canonicalize();
    Rat inv = 1 / d.scale;
    d.poly = inv * raw;
  } else {
    d.poly = std::move(raw);
  }
  if (curve.beta == 1 && !d.even_part) {
    for (const auto& v : d.poly.coeffs()) {
      if (v.get_den() != 1) throw std::logic_error("fueter: non-integral coefficient for beta = 1");
    }
  }
  return d;
}

bool psi_fueter_identity_check(const TateNormalCurve& curve, unsigned n, const Rat& T) {
  if (n % 2 == 0) throw std::invalid_argument("psi_fueter_identity_check: n must be odd");
  const Rat x = T_to_x(T, curve);
  const Rat lhs = psi(curve.weierstrass, n).poly(x);
  const unsigned long d = (static_cast<unsigned long>(n) * n - 1) / 2;
  Rat factor = Rat(curve.a * curve.beta) / T;
  Rat power = 1;
  for (unsigned long i = 0; i < d; ++i) power *= factor;
  Rat rhs = power * fueter(curve.fueter, n).poly(T);
  if (((n - 1) / 2) % 2 == 1) rhs = -rhs;
  return lhs == rhs;
}

Rat double_x(const WeierstrassCurve& e, const Rat& x) {
  const Rat x2 = x * x;
  const Rat den = 4 * x2 * x + e.b2 * x2 + 2 * e.b4 * x + e.b6;
  if (den == 0) throw MathError("double_x: point is 2-torsion");
  const Rat num = x2 * x2 - e.b4 * x2 - 2 * e.b6 * x - e.b8;
  Rat r = num / den;
  r.canonicalize();
  return r;
}

namespace {

// base^e for a possibly negative integer exponent
Rat rat_pow(const Rat& base, long e) {
  Rat r = 1;
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Int num = pow(Int(base.get_num()), k);
  Int den = pow(Int(base.get_den()), k);
  r = e >= 0 ? Rat(num, den) : Rat(den, num);
  r.canonicalize();
  return r;
}

}  // namespace

Rat verdure_disc(unsigned n, const Rat& delta) {
  if (n == 0) throw std::invalid_argument("verdure_disc: n must be positive");
  const long N = n;
  const long n2 = N * N;
  const long n4 = n2 * n2;
  if (n % 2 == 1) {
    Rat r = rat_pow(Rat(N), (n2 - 3) / 2) * rat_pow(delta, (n4 - 4 * n2 + 3) / 24);
    return ((n - 1) / 2) % 2 == 1 ? Rat(-r) : r;
  }
  Rat r = 16 * rat_pow(Rat(N), (n2 - 6) / 2) * rat_pow(delta, (n4 - 10 * n2 + 24) / 24);
  return ((n - 2) / 2) % 2 == 1 ? Rat(-r) : r;
}

Rat fueter_disc(unsigned n, const Int& alpha, const Int& beta) {
  if (n % 2 == 0) throw std::invalid_argument("fueter_disc: n must be odd");
  const long N = n;
  const long n2 = N * N;
  const long n4 = n2 * n2;
  Rat inner = Rat(Int((alpha - 8 * beta) * (alpha + 8 * beta)), Int(beta * beta));
  inner.canonicalize();
  Rat r = rat_pow(Rat(N), (n2 - 3) / 2) * rat_pow(inner, (n4 - 4 * n2 + 3) / 24);
  return ((n - 1) / 2) % 2 == 1 ? Rat(-r) : r;
}

}  // namespace monogen
