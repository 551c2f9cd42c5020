#pragma once

// Exact integer and rational utilities: p-adic valuations, factorization,
// squarefree tests and Legendre symbols. Int and Rat are GMP-backed.

#include <gmpxx.h>

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monogen {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when a valuation of zero is requested.
class InfiniteValuation : public std::domain_error {
 public:
  InfiniteValuation() : std::domain_error("valuation of zero is infinite") {}
};

/// Any failure that is a property of the mathematical input (singular curve,
/// reducible polynomial where an irreducible one is required, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wall-clock budget checked cooperatively by long-running routines.
/// A default-constructed budget never expires.
class Budget {
 public:
  Budget() = default;
  static Budget milliseconds(long ms);

  bool expired() const;
  /// Throws BudgetExceeded naming `what` once the deadline has passed.
  void check(const char* what) const;

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

enum class Primality { composite, prime, probable_prime };

/// Strong probable-prime test. Deterministic below 3.3e14 (bases 2..17);
/// larger inputs that pass are reported as probable_prime.
Primality primality(const Int& n);
bool is_probable_prime(const Int& n);

struct PrimePower {
  Int prime;
  unsigned exponent = 0;
  bool certified = true;  // false when only a probable prime
};

struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing

  Int product() const;
  bool all_certified() const;
};

/// Largest k with p^k | x. Throws InfiniteValuation for x == 0.
unsigned vp(const Int& x, const Int& p);
/// Valuation of a nonzero rational (may be negative).
long vp(const Rat& x, const Int& p);

/// Trial division to 10^6, then Brent-Pollard rho on the cofactors.
Factorization factor(const Int& x, const Budget& budget = {});

bool is_squarefree(const Int& x, const Budget& budget = {});

/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Int& a, const Int& p);

/// Least non-negative residue of a modulo |m|.
Int mod(const Int& a, const Int& m);
/// Floor of a / b for b != 0.
Int floor_div(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);
Int pow(const Int& base, unsigned long e);
/// Modular inverse; throws MathError when gcd(a, m) != 1.
Int inverse_mod(const Int& a, const Int& m);

/// All positive divisors of |x| in increasing order (x != 0).
std::vector<Int> divisors(const Int& x, const Budget& budget = {});

bool fits_long(const Int& x);
std::string to_string(const Int& x);
std::string to_string(const Rat& x);
/// Parses "n" or "n/d"; throws std::invalid_argument.
Rat parse_rat(const std::string& text);
Int parse_int(const std::string& text);

}  // namespace monogen
