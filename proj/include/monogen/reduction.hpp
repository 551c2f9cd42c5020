#pragma once

// Closed-form Kodaira type, conductor exponent and component count of the
// Tate normal form curves with a rational 4-torsion point.

#include <optional>
#include <string>
#include <vector>

#include "monogen/arith.hpp"

namespace monogen {

struct KodairaType {
  enum class Kind { good, I, I_star, III, III_star };
  Kind kind = Kind::good;
  unsigned n = 0;  // subscript for I_n and I*_n

  /// "I_3", "I*_1", "III", "III*", "I*_0" or "good".
  std::string name() const;
  /// Number of irreducible components of the special fibre.
  unsigned components() const;
  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

struct ReductionData {
  Int p;
  KodairaType kodaira;
  std::optional<unsigned> f;  // conductor exponent, when known
  std::optional<unsigned> c;  // component count, when known
  std::string case_tag;       // which clause of the classification fired
  unsigned minimal_shift_w = 0;
  /// v_p of the discriminant of the model the clause reports as minimal;
  /// set for the odd-prime clauses only.
  std::optional<unsigned> minimal_delta_valuation;
};

/// Classification at an odd prime dividing beta (alpha - 8 beta)(alpha + 8 beta).
/// Throws MathError when p is a prime of good reduction or the parameters
/// are not coprime.
ReductionData classify_odd(const Int& alpha, const Int& beta, const Int& p);

/// Classification at p = 2. Throws MathError when 2 does not divide the
/// discriminant.
ReductionData classify_two(const Int& alpha, const Int& beta);

/// One entry per prime of bad reduction, increasing p.
std::vector<ReductionData> reduction_table(const Int& alpha, const Int& beta, const Budget& budget = {});

/// v_p(Delta_min) == f + m - 1 with m the geometric component count.
bool ogg_consistent(const ReductionData& r);

}  // namespace monogen
