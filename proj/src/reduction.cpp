#include "monogen/reduction.hpp"

#include <set>

namespace monogen {

std::string KodairaType::name() const {
  switch (kind) {
    case Kind::good:
      return "good";
    case Kind::I:
      return "I_" + std::to_string(n);
    case Kind::I_star:
      return "I*_" + std::to_string(n);
    case Kind::III:
      return "III";
    case Kind::III_star:
      return "III*";
  }
  return "?";
}

unsigned KodairaType::components() const {
  switch (kind) {
    case Kind::good:
      return 1;
    case Kind::I:
      return n;
    case Kind::I_star:
      return n + 5;
    case Kind::III:
      return 2;
    case Kind::III_star:
      return 8;
  }
  return 0;
}

namespace {

KodairaType type_I(unsigned n) { return {KodairaType::Kind::I, n}; }
KodairaType type_I_star(unsigned n) { return {KodairaType::Kind::I_star, n}; }

void require_coprime(const Int& alpha, const Int& beta) {
  if (gcd(alpha, beta) != 1) throw MathError("alpha and beta must be coprime");
  if (beta == 0 || alpha == 8 * beta || alpha == -8 * beta) throw MathError("singular curve: discriminant is zero");
}

// p | beta: I_{4 v_p(beta)}, shared by odd p and p = 2.
ReductionData beta_case(const Int& beta, const Int& p, const std::string& tag) {
  ReductionData r;
  r.p = p;
  const unsigned v = vp(beta, p);
  r.kodaira = type_I(4 * v);
  r.f = 1;
  r.c = 4 * v;
  r.case_tag = tag;
  r.minimal_delta_valuation = 4 * v;
  return r;
}

}  // namespace

ReductionData classify_odd(const Int& alpha, const Int& beta, const Int& p) {
  require_coprime(alpha, beta);
  if (p == 2) throw std::invalid_argument("classify_odd: p must be odd");
  const Int minus = alpha - 8 * beta;
  const Int plus = alpha + 8 * beta;
  const bool in_beta = mod(beta, p) == 0;
  const bool in_minus = mod(minus, p) == 0;
  const bool in_plus = mod(plus, p) == 0;
  const int fired = int(in_beta) + int(in_minus) + int(in_plus);
  if (fired == 0) throw MathError("classify_odd: p = " + to_string(p) + " is a prime of good reduction");
  if (fired > 1) throw std::logic_error("classify_odd: clauses are not mutually exclusive");

  if (in_beta) return beta_case(beta, p, "tate-1");

  ReductionData r;
  r.p = p;
  r.f = 1;
  if (in_minus) {
    const unsigned v = vp(minus, p);
    r.kodaira = type_I(v);
    if (mod(p, 4) == 1) {
      r.c = v;
      r.case_tag = "tate-2a";
    } else {
      r.c = v % 2 == 1 ? 1 : 2;
      r.case_tag = "tate-2b";
    }
    r.minimal_delta_valuation = v;
    return r;
  }

  const unsigned v = vp(plus, p);
  const unsigned w = v / 2;
  r.minimal_shift_w = w;
  // after (x, y) = (p^{2w} x', p^{3w} y') the discriminant loses p^{12w}
  r.minimal_delta_valuation = 7 * v - 12 * w;
  if (v % 2 == 1) {
    r.kodaira = type_I_star(v);
    r.f = 2;
    r.c = 4;
    r.case_tag = "tate-3a";
  } else {
    r.kodaira = type_I(v);
    const Int unit = beta * plus / pow(p, 2 * w);
    r.c = legendre(unit, p) == 1 ? v : 2;
    r.case_tag = "tate-3b";
  }
  return r;
}

ReductionData classify_two(const Int& alpha, const Int& beta) {
  require_coprime(alpha, beta);
  const Int two = 2;
  if (mod(beta, two) == 0) return beta_case(beta, two, "tate2-beta");
  const Int a = alpha + 8 * beta;
  if (mod(a, two) != 0) throw MathError("classify_two: 2 is a prime of good reduction");

  ReductionData r;
  r.p = two;
  const unsigned v = vp(a, two);
  const unsigned w = v / 2;
  r.minimal_shift_w = v > 1 ? w : 0;
  if (v == 1) {
    r.kodaira = type_I_star(1);
    r.f = 3;
    r.c = 4;
    r.case_tag = "tate2-1";
    return r;
  }
  if (v == 2) {
    r.kodaira = {KodairaType::Kind::III, 0};
    r.case_tag = "tate2-2";
    return r;
  }
  if (v % 2 == 1) {
    r.kodaira = type_I_star(v);
    r.case_tag = "tate2-3";
    return r;
  }
  // (beta a + 2^w a - 2^{2w}) / 2^{2w+1}; equals (beta a + 4a - 16)/32 at v = 4
  const Int shifted = beta * a + pow(two, w) * a - pow(two, 2 * w);
  const Int modulus = pow(two, 2 * w + 1);
  if (mod(shifted, modulus) != 0) throw std::logic_error("classify_two: non-integral step-6 coefficient");
  const bool odd_step6 = mod(shifted / modulus, two) == 1;
  if (v == 4) {
    if (odd_step6) {
      r.kodaira = type_I_star(0);
      r.case_tag = "tate2-4";
      return r;
    }
    // a = 16u with u = beta mod 4; the subprocedure stops after v_2(u - beta) steps
    r.kodaira = type_I_star(vp(Int(alpha - 8 * beta), two) - 4);
    r.case_tag = "tate2-5";
    return r;
  }
  if (odd_step6) {
    r.kodaira = type_I_star(v - 4);
    r.case_tag = "tate2-6a";
    return r;
  }
  if (v == 6) {
    r.kodaira = {KodairaType::Kind::III_star, 0};
    r.case_tag = "tate2-6b-i";
  } else if (v == 8) {
    r.kodaira = {KodairaType::Kind::good, 0};
    r.f = 0;
    r.c = 1;
    r.case_tag = "tate2-6b-ii";
  } else {
    r.kodaira = type_I(v - 8);
    r.case_tag = "tate2-6b-iii";
  }
  return r;
}

std::vector<ReductionData> reduction_table(const Int& alpha, const Int& beta, const Budget& budget) {
  require_coprime(alpha, beta);
  std::set<Int> primes;
  for (const Int& x : {Int(beta), Int(alpha - 8 * beta), Int(alpha + 8 * beta)}) {
    for (const auto& pp : factor(x, budget).factors) primes.insert(pp.prime);
  }
  std::vector<ReductionData> out;
  for (const auto& p : primes) {
    ReductionData r = p == 2 ? classify_two(alpha, beta) : classify_odd(alpha, beta, p);
    if (r.kodaira.kind == KodairaType::Kind::good) continue;
    out.push_back(std::move(r));
  }
  return out;
}

bool ogg_consistent(const ReductionData& r) {
  if (!r.f || !r.minimal_delta_valuation) return false;
  return *r.minimal_delta_valuation == *r.f + r.kodaira.components() - 1;
}

}  // namespace monogen
