#pragma once

// Weierstrass and Fueter models of the curves with a rational 4-torsion
// point, their division polynomials and the change of variables x <-> T.

#include <memory>

#include "monogen/poly.hpp"

namespace monogen {

namespace detail {
class DivisionCache;
}

/// Memoization depth used for division and Fueter polynomials.
inline constexpr unsigned kDefaultMemoCap = 25;

struct WeierstrassCurve {
  Rat a1, a2, a3, a4, a6;
  Rat b2, b4, b6, b8;
  Rat delta;
  Rat j;

  /// Derives b2..b8, delta and j. Throws MathError when delta = 0.
  static WeierstrassCurve from_a_invariants(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4,
                                            const Rat& a6, unsigned memo_cap = kDefaultMemoCap);

  /// 4x^3 + b2 x^2 + 2 b4 x + b6, the square of Psi_2 on the curve.
  PolyRat psi2_squared() const;

  std::shared_ptr<detail::DivisionCache> cache;
};

/// T_1^2 = T (4T^2 + (alpha/beta) T + 4).
struct FueterCurve {
  Int alpha, beta;
  Rat c;  // alpha / beta

  /// 4T^2 + cT + 4, the square of F_2.
  PolyRat f2_squared() const;

  std::shared_ptr<detail::DivisionCache> cache;
};

/// y^2 + a xy + beta a^2 y = x^3 + beta a x^2 with a = alpha + 8 beta.
struct TateNormalCurve {
  Int alpha, beta, a;
  WeierstrassCurve weierstrass;
  FueterCurve fueter;
};

/// Throws MathError for non-coprime parameters or a singular curve.
TateNormalCurve tate_curve(const Int& alpha, const Int& beta, unsigned memo_cap = kDefaultMemoCap);

/// x = a beta / T - a beta and its inverse T = a beta / (x + a beta).
/// Both throw MathError at the excluded point.
Rat T_to_x(const Rat& T, const TateNormalCurve& curve);
Rat x_to_T(const Rat& x, const TateNormalCurve& curve);

/// Psi_n = poly * Psi_2 for even n (even_part), Psi_n = poly for odd n.
/// For Fueter polynomials with even n, F_n = scale * F_2 * poly with poly
/// monic and scale = n/2; scale is 1 otherwise.
struct DivisionPoly {
  unsigned n = 0;
  bool even_part = false;
  Rat scale = 1;
  PolyRat poly;
};

/// n-th division polynomial in x. Thread-safe; memoized per curve.
DivisionPoly psi(const WeierstrassCurve& curve, unsigned n);
/// n-th Fueter polynomial in T. Thread-safe; memoized per curve.
DivisionPoly fueter(const FueterCurve& curve, unsigned n);

/// Exact check of Psi_n(x(T)) = (-1)^{(n-1)/2} (a beta / T)^{(n^2-1)/2} F_n(T)
/// for odd n. Throws MathError at T = 0.
bool psi_fueter_identity_check(const TateNormalCurve& curve, unsigned n, const Rat& T);

/// x([2]P) from x(P). Throws MathError for 2-torsion input.
Rat double_x(const WeierstrassCurve& curve, const Rat& x);

/// Closed-form discriminant of Psi_n in terms of the curve discriminant.
Rat verdure_disc(unsigned n, const Rat& delta);
/// Closed-form discriminant of the odd Fueter polynomial F_n.
Rat fueter_disc(unsigned n, const Int& alpha, const Int& beta);

}  // namespace monogen
