#pragma once

// Monogenicity certificates for the quartic fields Q[T]/(T^4 - 6T^2 - aT - 3),
// their Galois group and signature, the parametrized unit, and surveys of
// related two-parameter quartic families.

#include <optional>
#include <string>
#include <vector>

#include "monogen/newton.hpp"
#include "monogen/reduction.hpp"

namespace monogen {

/// T^4 - 6T^2 - alpha T - 3.
PolyInt fueter_cubic_quartic(const Int& alpha);

/// Exact irreducibility over Q of a monic integer quartic: no rational root
/// and no splitting into two monic integer quadratics.
bool quartic_irreducible(const PolyInt& f, const Budget& budget = {});

enum class Verdict { monogenic, not_certified, hypothesis_failed };
std::string to_string(Verdict v);

struct PrimeEvidence {
  Int p;
  std::optional<PolyInt> lift;  // empty when p has no repeated factor
  std::optional<unsigned> a0_val;
  std::optional<NewtonPolygon> polygon;
  unsigned ind_p = 0;  // lower bound for v_p(index); exact when `exact`
  bool exact = true;
  bool dedekind = true;  // Dedekind's criterion says Z[theta] is p-maximal
  bool dedekind_agrees = true;
};

struct MonogenicityCertificate {
  std::optional<Int> alpha;  // empty for polynomials outside the family
  PolyInt polynomial;
  bool hypothesis_ok = false;
  std::optional<Int> field_disc;
  std::vector<PrimeEvidence> primes;
  Verdict verdict = Verdict::not_certified;
  std::vector<std::string> trust;    // probable-prime caveats
  std::vector<std::string> reasons;  // why the verdict is not monogenic
  bool budget_exhausted = false;
  /// Kodaira types of (alpha, 1) when they were computed, with whether they
  /// are all I_1 / I*_1.
  std::vector<ReductionData> reduction;
  std::optional<bool> reduction_corroborates;

  /// Primes where Dedekind's criterion shows Z[theta] is not maximal.
  std::vector<Int> nonmaximal_primes() const;
};

/// Curve-guided certificate: alpha +- 8 squarefree, F_3 irreducible, one
/// evidence row at 2 (alpha even), 3 and every p >= 5 dividing alpha^2 - 64.
MonogenicityCertificate certify(const Int& alpha, const Budget& budget = {});

/// Montes at every prime dividing disc(Phi) with default lifts.
/// Phi must be monic and squarefree over Q, else MathError.
MonogenicityCertificate certify_polynomial(const PolyInt& Phi, const Budget& budget = {});
MonogenicityCertificate certify_generic(const Int& alpha, const Budget& budget = {});

struct GaloisSignature {
  std::string group;  // "S4", "A4", "D4/C4", "V4"
  unsigned real_roots = 0;
  PolyInt resolvent;
};

/// Galois group of a monic irreducible integer quartic from its resolvent
/// cubic and discriminant. Throws MathError for reducible input.
GaloisSignature quartic_galois(const PolyInt& f);
GaloisSignature galois_signature(const Int& alpha);

/// Norm of 1 + (alpha/3) theta + 2 theta^2. Throws invalid_argument when
/// 3 does not divide alpha, MathError when F_3 is reducible or the norm is
/// not +-1.
Int unit_norm_check(const Int& alpha);

/// Certificates for alpha in [lo, hi], in increasing alpha whatever `jobs`.
/// `budget_ms` applies per alpha (0 means unlimited).
std::vector<MonogenicityCertificate> scan(const Int& lo, const Int& hi, unsigned jobs = 1, long budget_ms = 0);

enum class Family { A, B, C };
Family parse_family(const std::string& id);
std::string to_string(Family f);

struct FamilyEntry {
  Family family = Family::A;
  Int s, t;
  PolyInt polynomial;
  Int predicted_disc;
  Int computed_disc;
  /// The factor whose square appears in the closed-form discriminant.
  Int squared_factor;
  std::optional<MonogenicityCertificate> certificate;

  bool disc_matches() const { return predicted_disc == computed_disc; }
};

PolyInt family_polynomial(Family f, const Int& s, const Int& t);
/// Closed-form discriminant from the table, with its squared factor.
std::pair<Int, Int> family_disc(Family f, const Int& s, const Int& t);

/// Every (s, t) in the box; runs certify_polynomial when the squared factor
/// is squarefree and the polynomial is irreducible.
std::vector<FamilyEntry> survey_family(Family f, const Int& s_lo, const Int& s_hi, const Int& t_lo, const Int& t_hi,
                                       unsigned jobs = 1, long budget_ms = 0);

}  // namespace monogen
