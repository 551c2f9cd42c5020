#include "monogen/valuation.hpp"

namespace monogen {

Int R(unsigned n, const Int& a, const Int& ell) {
  if (ell == 0) throw std::invalid_argument("R: ell must be nonzero");
  const Int ah = mod(a, ell);
  const Int nah = mod(Int(n) * a, ell);
  const Int two_ell = 2 * ell;
  return floor_div(Int(n) * Int(n) * ah * (ell - ah), two_ell) - floor_div(nah * (ell - nah), two_ell);
}

std::string to_string(SingularCase::Tag tag) {
  switch (tag) {
    case SingularCase::Tag::Minus:
      return "minus";
    case SingularCase::Tag::Plus:
      return "plus";
    case SingularCase::Tag::Beta:
      return "beta";
  }
  return "?";
}

SingularCase singular_case(const Int& alpha, const Int& beta, const Int& p) {
  if (p == 2) throw std::invalid_argument("singular_case: p must be odd");
  if (gcd(alpha, beta) != 1) throw MathError("alpha and beta must be coprime");
  const Int minus = alpha - 8 * beta;
  const Int plus = alpha + 8 * beta;
  if (minus == 0 || plus == 0 || beta == 0) throw MathError("singular curve: discriminant is zero");
  SingularCase c;
  c.p = p;
  if (mod(minus, p) == 0) {
    c.tag = SingularCase::Tag::Minus;
    c.v = vp(minus, p);
  } else if (mod(plus, p) == 0) {
    c.tag = SingularCase::Tag::Plus;
    c.v = vp(plus, p);
  } else if (mod(beta, p) == 0) {
    c.tag = SingularCase::Tag::Beta;
    c.v = vp(beta, p);
  } else {
    throw MathError("singular_case: p = " + to_string(p) + " is a prime of good reduction");
  }
  return c;
}

namespace {

void require_odd(unsigned n, const char* what) {
  if (n % 2 == 0) throw std::invalid_argument(std::string(what) + ": n must be odd");
}

}  // namespace

unsigned predicted_valuation(const SingularCase& c, unsigned n) {
  require_odd(n, "predicted_valuation");
  const unsigned base = (n * n - 1) / 8;
  switch (c.tag) {
    case SingularCase::Tag::Minus:
      return c.v * base;
    case SingularCase::Tag::Beta:
      return c.v * 3 * base;
    case SingularCase::Tag::Plus:
      return c.v * 5 * base;
  }
  return 0;
}

long predicted_fueter_valuation(const SingularCase& c, unsigned n) {
  require_odd(n, "predicted_fueter_valuation");
  const long base = static_cast<long>(c.v) * ((n * n - 1) / 8);
  return c.tag == SingularCase::Tag::Beta ? -base : base;
}

Int singular_x(const TateNormalCurve& curve, const SingularCase& c) {
  if (c.tag == SingularCase::Tag::Minus) return -32 * curve.beta * curve.beta;
  return 0;
}

Rat singular_T_exact(const TateNormalCurve& curve, const SingularCase& c) {
  return x_to_T(Rat(singular_x(curve, c)), curve);
}

Int singular_T(const SingularCase& c, const TateNormalCurve& curve) {
  if (c.tag != SingularCase::Tag::Minus) return 1;
  const Int ab = curve.a * curve.beta;
  const Int den = singular_x(curve, c) + ab;
  // den = a beta - 32 beta^2 = beta (alpha - 24 beta) = -16 beta^2 mod p, a unit
  if (mod(den, c.p) == 0) throw std::logic_error("singular_T: x = -a beta mod p is unreachable");
  return mod(ab * inverse_mod(den, c.p), c.p);
}

unsigned observed_psi_valuation(const TateNormalCurve& curve, const SingularCase& c, unsigned n) {
  require_odd(n, "observed_psi_valuation");
  const Rat value = psi(curve.weierstrass, n).poly(Rat(singular_x(curve, c)));
  if (value == 0) throw InfiniteValuation();
  if (value.get_den() != 1) throw std::logic_error("observed_psi_valuation: non-integral value");
  return vp(Int(value.get_num()), c.p);
}

long observed_fueter_valuation(const TateNormalCurve& curve, const SingularCase& c, unsigned n) {
  require_odd(n, "observed_fueter_valuation");
  const Rat value = fueter(curve.fueter, n).poly(singular_T_exact(curve, c));
  if (value == 0) throw InfiniteValuation();
  return vp(value, c.p);
}

}  // namespace monogen
