#pragma once

// Valuations of odd division and Fueter polynomials at the singular point
// of the reduction, predicted in closed form and observed by evaluation.

#include "monogen/elliptic.hpp"

namespace monogen {

/// floor(n^2 a'(l - a') / 2l) - floor((na)'(l - (na)') / 2l), where x' is the
/// least non-negative residue of x modulo l. Throws invalid_argument for l = 0.
Int R(unsigned n, const Int& a, const Int& ell);

struct SingularCase {
  enum class Tag { Minus, Plus, Beta };
  Tag tag = Tag::Minus;
  Int p;
  unsigned v = 0;  // v_p of alpha - 8 beta, alpha + 8 beta or beta
};

std::string to_string(SingularCase::Tag tag);

/// Which of p | alpha - 8 beta, p | alpha + 8 beta, p | beta holds for an odd
/// prime p. Throws MathError when none does.
SingularCase singular_case(const Int& alpha, const Int& beta, const Int& p);

/// v_p(Psi_n) at the singular point. Throws invalid_argument for even n.
unsigned predicted_valuation(const SingularCase& c, unsigned n);
/// v_p(F_n) at the corresponding T. Throws invalid_argument for even n.
long predicted_fueter_valuation(const SingularCase& c, unsigned n);

/// x-coordinate of the point reducing to the singular point:
/// -2^5 beta^2 in the Minus case, 0 otherwise.
Int singular_x(const TateNormalCurve& curve, const SingularCase& c);
/// The T-value matching singular_x: a beta / (x + a beta).
Rat singular_T_exact(const TateNormalCurve& curve, const SingularCase& c);
/// singular_T_exact reduced modulo p, in [0, p).
Int singular_T(const SingularCase& c, const TateNormalCurve& curve);

/// v_p(Psi_n(singular_x)) by exact evaluation. Throws InfiniteValuation when
/// the value is zero and invalid_argument for even n.
unsigned observed_psi_valuation(const TateNormalCurve& curve, const SingularCase& c, unsigned n);
/// v_p(F_n(singular_T_exact)) by exact evaluation.
long observed_fueter_valuation(const TateNormalCurve& curve, const SingularCase& c, unsigned n);

}  // namespace monogen
