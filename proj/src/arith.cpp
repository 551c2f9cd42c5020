#include "monogen/arith.hpp"

#include <algorithm>
#include <map>

namespace monogen {

Budget Budget::milliseconds(long ms) {
  Budget b;
  b.deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
  return b;
}

bool Budget::expired() const {
  return deadline_ && std::chrono::steady_clock::now() > *deadline_;
}

void Budget::check(const char* what) const {
  if (expired()) throw BudgetExceeded(std::string("time budget exceeded during ") + what);
}

namespace {

const Int kDeterministicBound("330000000000000");

bool strong_probable_prime(const Int& n, unsigned long base) {
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Int x;
  Int b = base;
  mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Int minus_one = n - 1;
  if (x == 1 || x == minus_one) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == minus_one) return true;
    if (x == 1) return false;
  }
  return false;
}

constexpr unsigned long kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

std::vector<unsigned long> sieve(unsigned long limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<unsigned long> primes;
  for (unsigned long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<unsigned long>& trial_primes() {
  static const std::vector<unsigned long> primes = sieve(1000000);
  return primes;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of a composite n.
Int rho_split(const Int& n, const Budget& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Int& v) -> Int { return (v * v + c) % n; };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Int diff = x - y;
          q = q * abs(diff) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
      budget.check("integer factorization");
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Int diff = x - ys;
        g = gcd(abs(diff), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Int& n, std::map<Int, PrimePower>& out, const Budget& budget) {
  if (n == 1) return;
  const Primality kind = primality(n);
  if (kind != Primality::composite) {
    auto [it, inserted] = out.try_emplace(n, PrimePower{n, 0, true});
    it->second.exponent += 1;
    if (kind == Primality::probable_prime) it->second.certified = false;
    return;
  }
  // perfect powers defeat rho with this polynomial family often enough to matter
  Int root;
  for (unsigned long k = 2; k < 64; ++k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      for (unsigned long i = 0; i < k; ++i) split_into(root, out, budget);
      return;
    }
    if (root < 2) break;
  }
  Int d = rho_split(n, budget);
  split_into(d, out, budget);
  Int rest = n / d;
  split_into(rest, out, budget);
}

}  // namespace

Primality primality(const Int& n) {
  if (n < 2) return Primality::composite;
  for (unsigned long p : kSmallPrimes) {
    if (n == p) return Primality::prime;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::composite;
  }
  const bool small = n < kDeterministicBound;
  const std::size_t bases = small ? 7 : std::size(kSmallPrimes);
  for (std::size_t i = 0; i < bases; ++i) {
    if (!strong_probable_prime(n, kSmallPrimes[i])) return Primality::composite;
  }
  return small ? Primality::prime : Primality::probable_prime;
}

bool is_probable_prime(const Int& n) { return primality(n) != Primality::composite; }

Int Factorization::product() const {
  Int r = sign;
  for (const auto& f : factors) r *= pow(f.prime, f.exponent);
  return r;
}

bool Factorization::all_certified() const {
  return std::all_of(factors.begin(), factors.end(), [](const PrimePower& f) { return f.certified; });
}

unsigned vp(const Int& x, const Int& p) {
  if (x == 0) throw InfiniteValuation();
  if (p < 2) throw std::invalid_argument("vp: modulus must be a prime");
  Int rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long vp(const Rat& x, const Int& p) {
  if (x == 0) throw InfiniteValuation();
  return static_cast<long>(vp(Int(x.get_num()), p)) - static_cast<long>(vp(Int(x.get_den()), p));
}

Factorization factor(const Int& x, const Budget& budget) {
  if (x == 0) throw std::invalid_argument("factor: zero has no factorization");
  Factorization result;
  result.sign = x < 0 ? -1 : 1;
  Int n = abs(x);
  for (unsigned long p : trial_primes()) {
    if (n == 1) break;
    if (Int(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      PrimePower pp{Int(p), 0, true};
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++pp.exponent;
      }
      result.factors.push_back(pp);
    }
  }
  std::map<Int, PrimePower> large;
  split_into(n, large, budget);
  for (auto& [p, pp] : large) result.factors.push_back(pp);
  std::sort(result.factors.begin(), result.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return result;
}

bool is_squarefree(const Int& x, const Budget& budget) {
  const Factorization f = factor(x, budget);
  return std::all_of(f.factors.begin(), f.factors.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

int legendre(const Int& a, const Int& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t())) throw std::invalid_argument("legendre: p must be an odd prime");
  Int r = mod(a, p);
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

Int mod(const Int& a, const Int& m) {
  Int r;
  Int am = abs(m);
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int inverse_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw MathError("inverse_mod: " + to_string(a) + " is not invertible modulo " + to_string(m));
  }
  return mod(r, m);
}

std::vector<Int> divisors(const Int& x, const Budget& budget) {
  const Factorization f = factor(x, budget);
  std::vector<Int> out{Int(1)};
  for (const auto& pp : f.factors) {
    const std::size_t base = out.size();
    Int power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool fits_long(const Int& x) { return x.fits_slong_p(); }

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) { return x.get_str(); }

Int parse_int(const std::string& text) {
  Int v;
  std::string s = text;
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: '" + text + "'");
  return v;
}

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace monogen
