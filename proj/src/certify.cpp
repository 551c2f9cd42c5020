#include "monogen/certify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "monogen/valuation.hpp"

namespace monogen {

PolyInt fueter_cubic_quartic(const Int& alpha) { return PolyInt{Int(-3), Int(-alpha), Int(-6), Int(0), Int(1)}; }

bool quartic_irreducible(const PolyInt& f, const Budget& budget) {
  if (f.degree() != 4 || !f.is_monic()) throw std::invalid_argument("quartic_irreducible: expected a monic quartic");
  if (!rational_roots(f, budget).empty()) return false;
  const Int f0 = f.coeff(0), f1 = f.coeff(1), f2 = f.coeff(2), f3 = f.coeff(3);
  // (x^2 + ax + b)(x^2 + cx + d) with bd = f0, a + c = f3
  for (const Int& pos : divisors(f0, budget)) {
    for (const Int& b : {Int(pos), Int(-pos)}) {
      budget.check("quartic_irreducible");
      const Int d = f0 / b;
      std::vector<Int> candidates;
      if (d != b) {
        const Int num = f1 - b * f3;
        const Int den = d - b;
        if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) candidates.push_back(num / den);
      } else if (f1 == b * f3) {
        // a and c are the roots of t^2 - f3 t + (f2 - 2b)
        const Int disc = f3 * f3 - 4 * (f2 - 2 * b);
        if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
          Int r;
          mpz_sqrt(r.get_mpz_t(), disc.get_mpz_t());
          if (mpz_even_p(Int(f3 + r).get_mpz_t())) candidates.push_back((f3 + r) / 2);
        }
      }
      for (const Int& a : candidates) {
        const Int c = f3 - a;
        if (a * c + b + d == f2 && a * d + b * c == f1) return false;
      }
    }
  }
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::monogenic:
      return "monogenic";
    case Verdict::not_certified:
      return "not_certified";
    case Verdict::hypothesis_failed:
      return "hypothesis_failed";
  }
  return "?";
}

std::vector<Int> MonogenicityCertificate::nonmaximal_primes() const {
  std::set<Int> out;
  for (const auto& row : primes) {
    if (!row.dedekind) out.insert(row.p);
  }
  return {out.begin(), out.end()};
}

namespace {

void note_trust(MonogenicityCertificate& cert, const Factorization& f) {
  for (const auto& pp : f.factors) {
    if (!pp.certified) cert.trust.push_back(to_string(pp.prime) + " is only a probable prime");
  }
}

PrimeEvidence evidence_row(const PolyInt& Phi, const Int& p, const PolyInt& lift, const IndexReport& report,
                           bool dedekind) {
  PrimeEvidence row;
  row.p = p;
  row.lift = lift;
  const PhiDevelopment dev = phi_development(Phi, lift);
  row.a0_val = vp(dev.terms[0], p);
  row.polygon = build_polygon(dev, p);
  row.ind_p = report.ind_p_lower_bound;
  row.exact = report.exact;
  row.dedekind = dedekind;
  row.dedekind_agrees = !row.exact || (row.ind_p == 0) == dedekind;
  return row;
}

// Verdict from the evidence rows; field_disc is set whenever every row is exact.
void conclude(MonogenicityCertificate& cert, const Rat& disc) {
  bool all_exact = true;
  bool all_zero = true;
  Int index = 1;
  std::set<Int> counted;
  for (const auto& row : cert.primes) {
    if (!row.dedekind_agrees) {
      cert.reasons.push_back("Montes and Dedekind disagree at p = " + to_string(row.p));
    }
    if (!row.exact) {
      all_exact = false;
      cert.reasons.push_back("p = " + to_string(row.p) + " is not regular");
    }
    if (row.ind_p > 0) {
      all_zero = false;
      if (counted.insert(row.p).second) {
        index *= pow(row.p, row.ind_p);
        cert.reasons.push_back("p = " + to_string(row.p) + " divides the index");
      }
    }
  }
  const bool agree = std::all_of(cert.primes.begin(), cert.primes.end(),
                                 [](const PrimeEvidence& r) { return r.dedekind_agrees; });
  if (all_exact && agree) {
    Rat fd = disc / Rat(index * index);
    fd.canonicalize();
    cert.field_disc = Int(fd.get_num());
  }
  cert.verdict = all_exact && all_zero && agree ? Verdict::monogenic : Verdict::not_certified;
}

// Runs f(i) for i in [0, n) on up to `jobs` threads and rethrows the first error.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned k = 0; k < jobs; ++k) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
}

Budget make_budget(long ms) { return ms > 0 ? Budget::milliseconds(ms) : Budget(); }

}  // namespace

MonogenicityCertificate certify(const Int& alpha, const Budget& budget) {
  MonogenicityCertificate cert;
  cert.alpha = alpha;
  cert.polynomial = fueter_cubic_quartic(alpha);
  const Int minus = alpha - 8;
  const Int plus = alpha + 8;
  if (minus == 0 || plus == 0) {
    cert.verdict = Verdict::hypothesis_failed;
    cert.reasons.push_back("alpha = " + to_string(alpha) + " gives a singular curve");
    return cert;
  }
  try {
    const Factorization fm = factor(minus, budget);
    const Factorization fp = factor(plus, budget);
    note_trust(cert, fm);
    note_trust(cert, fp);
    for (const auto& [name, fac] : {std::pair{"alpha - 8", &fm}, std::pair{"alpha + 8", &fp}}) {
      for (const auto& pp : fac->factors) {
        if (pp.exponent > 1) {
          cert.reasons.push_back(std::string(name) + " is divisible by " + to_string(pp.prime) + "^2");
        }
      }
    }
    if (!quartic_irreducible(cert.polynomial, budget)) cert.reasons.push_back("F_3 is reducible over Q");
    if (!cert.reasons.empty()) {
      cert.verdict = Verdict::hypothesis_failed;
      return cert;
    }
    cert.hypothesis_ok = true;

    const PolyInt T = PolyInt::monomial(Int(1), 1);
    std::vector<std::pair<Int, PolyInt>> plan;
    if (mod(alpha, Int(2)) == 0) plan.emplace_back(2, T - PolyInt::constant(1));
    const Int r3 = mod(alpha, Int(3));
    plan.emplace_back(3, r3 == 0 ? T : r3 == 1 ? T - PolyInt::constant(4) : T + PolyInt::constant(4));
    std::set<Int> odd_primes;
    for (const auto* fac : {&fm, &fp}) {
      for (const auto& pp : fac->factors) {
        if (pp.prime >= 5) odd_primes.insert(pp.prime);
      }
    }
    if (!odd_primes.empty()) {
      const TateNormalCurve curve = tate_curve(alpha, 1);
      for (const auto& p : odd_primes) {
        const SingularCase sc = singular_case(alpha, 1, p);
        plan.emplace_back(p, T - PolyInt::constant(singular_T(sc, curve)));
      }
    }
    for (const auto& [p, lift] : plan) {
      budget.check("certify");
      const IndexReport report = index_report(cert.polynomial, p, {lift});
      cert.primes.push_back(evidence_row(cert.polynomial, p, lift, report, dedekind_p_maximal(cert.polynomial, p)));
    }
    const Rat disc = discriminant(to_rat(cert.polynomial));
    conclude(cert, disc);
    if (cert.verdict == Verdict::monogenic && disc != Rat(-27 * minus * minus * plus * plus)) {
      throw std::logic_error("certify: disc(F_3) differs from -27 (alpha - 8)^2 (alpha + 8)^2");
    }

    cert.reduction = reduction_table(alpha, 1, budget);
    cert.reduction_corroborates = std::all_of(cert.reduction.begin(), cert.reduction.end(), [](const ReductionData& r) {
      return r.kodaira == KodairaType{KodairaType::Kind::I, 1} || r.kodaira == KodairaType{KodairaType::Kind::I_star, 1};
    });
  } catch (const BudgetExceeded& e) {
    cert.verdict = Verdict::not_certified;
    cert.budget_exhausted = true;
    cert.reasons.push_back(e.what());
  }
  return cert;
}

MonogenicityCertificate certify_polynomial(const PolyInt& Phi, const Budget& budget) {
  if (!Phi.is_monic() || Phi.degree() < 1) throw MathError("certify_polynomial: expected a monic polynomial");
  MonogenicityCertificate cert;
  cert.polynomial = Phi;
  const Rat disc = discriminant(to_rat(Phi));
  if (disc == 0) throw MathError("certify_polynomial: " + format_poly(Phi) + " is not squarefree");
  try {
    if (Phi.degree() == 4 && !quartic_irreducible(Phi, budget)) {
      cert.verdict = Verdict::hypothesis_failed;
      cert.reasons.push_back("polynomial is reducible over Q");
      return cert;
    }
    if (Phi.degree() != 4 && Phi.degree() > 1) cert.trust.push_back("irreducibility over Q not checked");
    cert.hypothesis_ok = true;
    const Factorization fd = factor(Int(disc.get_num()), budget);
    note_trust(cert, fd);
    for (const auto& pp : fd.factors) {
      budget.check("certify_polynomial");
      const Int& p = pp.prime;
      const IndexReport report = index_report(Phi, p);
      const bool dedekind = dedekind_p_maximal(Phi, p);
      if (report.per_phi.empty()) {
        PrimeEvidence row;
        row.p = p;
        row.dedekind = dedekind;
        row.dedekind_agrees = dedekind;
        cert.primes.push_back(std::move(row));
        continue;
      }
      for (const auto& phi_row : report.per_phi) {
        cert.primes.push_back(evidence_row(Phi, p, phi_row.phi, report, dedekind));
      }
    }
    conclude(cert, disc);
  } catch (const BudgetExceeded& e) {
    cert.verdict = Verdict::not_certified;
    cert.budget_exhausted = true;
    cert.reasons.push_back(e.what());
  }
  return cert;
}

MonogenicityCertificate certify_generic(const Int& alpha, const Budget& budget) {
  MonogenicityCertificate cert = certify_polynomial(fueter_cubic_quartic(alpha), budget);
  cert.alpha = alpha;
  return cert;
}

GaloisSignature quartic_galois(const PolyInt& f) {
  if (!quartic_irreducible(f)) throw MathError("quartic_galois: " + format_poly(f) + " is reducible");
  const Int a0 = f.coeff(0), a1 = f.coeff(1), a2 = f.coeff(2), a3 = f.coeff(3);
  GaloisSignature g;
  g.resolvent = PolyInt{Int(4 * a0 * a2 - a1 * a1 - a0 * a3 * a3), Int(a1 * a3 - 4 * a0), Int(-a2), Int(1)};
  const std::size_t roots = rational_roots(g.resolvent).size();
  const Rat disc = discriminant(to_rat(f));
  const Int d(disc.get_num());
  const bool square = d > 0 && mpz_perfect_square_p(d.get_mpz_t());
  if (roots == 0) {
    g.group = square ? "A4" : "S4";
  } else if (roots == 1) {
    g.group = "D4/C4";
  } else {
    g.group = "V4";
  }
  g.real_roots = count_real_roots(to_rat(f));
  return g;
}

GaloisSignature galois_signature(const Int& alpha) { return quartic_galois(fueter_cubic_quartic(alpha)); }

Int unit_norm_check(const Int& alpha) {
  if (mod(alpha, Int(3)) != 0) throw std::invalid_argument("unit_norm_check: 3 must divide alpha");
  const PolyInt F = fueter_cubic_quartic(alpha);
  if (!quartic_irreducible(F)) throw MathError("unit_norm_check: F_3 is reducible");
  const PolyRat u{Rat(1), Rat(alpha / 3), Rat(2)};
  const Rat n = resultant(to_rat(F), u);
  if (n != 1 && n != -1) throw MathError("unit_norm_check: norm " + to_string(n) + " is not a unit");
  return Int(n.get_num());
}

std::vector<MonogenicityCertificate> scan(const Int& lo, const Int& hi, unsigned jobs, long budget_ms) {
  if (hi < lo) return {};
  const Int span = hi - lo + 1;
  if (!span.fits_ulong_p()) throw std::invalid_argument("scan: range too large");
  const std::size_t n = span.get_ui();
  std::vector<MonogenicityCertificate> out(n);
  parallel_for(n, jobs, [&](std::size_t i) { out[i] = certify(lo + Int(static_cast<unsigned long>(i)), make_budget(budget_ms)); });
  return out;
}

Family parse_family(const std::string& id) {
  if (id == "A" || id == "a") return Family::A;
  if (id == "B" || id == "b") return Family::B;
  if (id == "C" || id == "c") return Family::C;
  throw std::invalid_argument("unknown family '" + id + "' (expected A, B or C)");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::A:
      return "A";
    case Family::B:
      return "B";
    case Family::C:
      return "C";
  }
  return "?";
}

PolyInt family_polynomial(Family f, const Int& s, const Int& t) {
  switch (f) {
    case Family::A:
      return PolyInt{Int(-3 * s * s), Int(-t), Int(-6 * s), Int(0), Int(1)};
    case Family::B:
      return PolyInt{Int(t), Int(-(4 * t + 3 * s * s)), Int(-3 * s), Int(-1), Int(1)};
    case Family::C:
      return PolyInt{Int(t), Int(-(2 * t + 6 * s * s)), Int(-6 * s), Int(-2), Int(1)};
  }
  return {};
}

std::pair<Int, Int> family_disc(Family f, const Int& s, const Int& t) {
  const Int s2 = s * s;
  const Int s3 = s2 * s;
  const Int s4 = s2 * s2;
  Int q;
  Int scale;
  switch (f) {
    case Family::A:
      q = t * t - 64 * s3;
      scale = -27;
      break;
    case Family::B:
      q = 16 * t * t + (24 * s2 + 12 * s + 1) * t + 9 * s4 + s3;
      scale = -27;
      break;
    case Family::C:
      q = t * t + (6 * s2 + 6 * s + 1) * t + 9 * s4 + 2 * s3;
      scale = -432;
      break;
  }
  return {scale * q * q, q};
}

std::vector<FamilyEntry> survey_family(Family f, const Int& s_lo, const Int& s_hi, const Int& t_lo, const Int& t_hi,
                                       unsigned jobs, long budget_ms) {
  std::vector<FamilyEntry> out;
  for (Int s = s_lo; s <= s_hi; ++s) {
    for (Int t = t_lo; t <= t_hi; ++t) {
      FamilyEntry e;
      e.family = f;
      e.s = s;
      e.t = t;
      e.polynomial = family_polynomial(f, s, t);
      std::tie(e.predicted_disc, e.squared_factor) = family_disc(f, s, t);
      out.push_back(std::move(e));
    }
  }
  parallel_for(out.size(), jobs, [&](std::size_t i) {
    FamilyEntry& e = out[i];
    const Budget budget = make_budget(budget_ms);
    e.computed_disc = Int(discriminant(to_rat(e.polynomial)).get_num());
    if (e.squared_factor == 0 || e.computed_disc == 0) return;
    try {
      if (!is_squarefree(e.squared_factor, budget)) return;
    } catch (const BudgetExceeded&) {
      return;
    }
    e.certificate = certify_polynomial(e.polynomial, budget);
  });
  return out;
}

}  // namespace monogen
