#include <doctest.h>

#include <set>

#include "monogen/certify.hpp"
#include "monogen/json.hpp"
#include "support.hpp"

using namespace monogen;

namespace {

const std::set<long> kMonogenicWindow = {-25, -23, -22, -21, -18, -15, -14, -13, -11, -9, -7, -6, -5, -3, -2,
                                         2,   3,   5,   6,   7,   9,   11,  13,  14,  15,  18,  21,  22,  23, 25};

Rat disc_rat(const PolyInt& f) { return discriminant(to_rat(f)); }

}  // namespace

TEST_CASE("the quartic of the family") {
  CHECK(fueter_cubic_quartic(Int(2)) == PolyInt{Int(-3), Int(-2), Int(-6), Int(0), Int(1)});
  for (long a = -50; a < 50; ++a) {
    if (a == 8 || a == -8) continue;
    const Int al(a);
    CHECK(disc_rat(fueter_cubic_quartic(al)) == Rat(-27 * (al - 8) * (al - 8) * (al + 8) * (al + 8)));
  }
}

TEST_CASE("quartic irreducibility") {
  CHECK(quartic_irreducible(fueter_cubic_quartic(Int(2))));
  CHECK(quartic_irreducible(PolyInt{Int(1), Int(0), Int(0), Int(0), Int(1)}));
  // (x^2 + 1)(x^2 - 2) and (x - 1)(x^3 + x + 1)
  CHECK_FALSE(quartic_irreducible(PolyInt{Int(-2), Int(0), Int(-1), Int(0), Int(1)}));
  CHECK_FALSE(quartic_irreducible(PolyInt{Int(-1), Int(1)} * PolyInt{Int(1), Int(1), Int(0), Int(1)}));
  testing::Rng rng(81);
  for (int i = 0; i < 100; ++i) {
    const PolyInt q1{rng.integer(-9, 9), rng.integer(-9, 9), Int(1)};
    const PolyInt q2{rng.integer(-9, 9), rng.integer(-9, 9), Int(1)};
    CHECK_FALSE(quartic_irreducible(q1 * q2));
    const PolyInt l{rng.integer(-9, 9), Int(1)};
    const PolyInt c{rng.integer(-9, 9), rng.integer(-9, 9), rng.integer(-9, 9), Int(1)};
    CHECK_FALSE(quartic_irreducible(l * c));
  }
  // Eisenstein at 3
  for (int i = 0; i < 50; ++i) {
    const PolyInt e{3 * (3 * rng.integer(-5, 5) + 1), 3 * rng.integer(-5, 5), 3 * rng.integer(-5, 5), 3 * rng.integer(-5, 5), Int(1)};
    CHECK(quartic_irreducible(e));
  }
}

TEST_CASE("certificate for alpha = 2") {
  const MonogenicityCertificate c = certify(Int(2));
  CHECK(c.verdict == Verdict::monogenic);
  CHECK(c.hypothesis_ok);
  REQUIRE(c.field_disc.has_value());
  CHECK(*c.field_disc == -97200);
  REQUIRE(c.primes.size() == 3);
  CHECK(c.primes[0].p == 2);
  CHECK(c.primes[0].lift == PolyInt{Int(-1), Int(1)});
  CHECK(c.primes[1].p == 3);
  CHECK(c.primes[1].lift == PolyInt{Int(4), Int(1)});
  CHECK(c.primes[2].p == 5);
  CHECK(c.primes[2].lift == PolyInt{Int(-1), Int(1)});
  for (const auto& e : c.primes) {
    CHECK(e.ind_p == 0);
    CHECK(e.exact);
    CHECK(e.dedekind);
  }
  CHECK(c.reduction_corroborates == true);
  CHECK(c.nonmaximal_primes().empty());
}

TEST_CASE("hypothesis failures") {
  const MonogenicityCertificate c = certify(Int(10));
  CHECK(c.verdict == Verdict::hypothesis_failed);
  CHECK_FALSE(c.hypothesis_ok);
  CHECK_FALSE(c.reasons.empty());
  CHECK(certify(Int(8)).verdict == Verdict::hypothesis_failed);
  CHECK(certify(Int(24)).verdict == Verdict::hypothesis_failed);
}

TEST_CASE("field discriminants from the generic route") {
  // dK computed independently by the Round Two algorithm
  const std::vector<std::pair<long, long>> known = {{2, -97200},   {-9, -7803}, {0, -1728},  {16, -15552},   {10, -3888},
                                                    {26, -1123632}, {40, -15552}, {4, -3888}, {12, -10800}, {1, -11907}};
  for (const auto& [a, dk] : known) {
    CAPTURE(a);
    const MonogenicityCertificate c = certify_generic(Int(a));
    const Int disc(disc_rat(c.polynomial).get_num());
    const Int index_sq = disc / dk;
    bool all_exact = true;
    for (const auto& e : c.primes) {
      CAPTURE(e.p);
      const unsigned true_ind = vp(index_sq, e.p) / 2;
      CHECK(e.ind_p <= true_ind);
      if (e.exact) CHECK(e.ind_p == true_ind);
      all_exact = all_exact && e.exact;
    }
    CHECK(c.field_disc.has_value() == all_exact);
    if (c.field_disc) CHECK(*c.field_disc == dk);
    CHECK((c.verdict == Verdict::monogenic) == (index_sq == 1));
  }
  const MonogenicityCertificate s = certify_generic(Int(16));
  CHECK(s.verdict != Verdict::monogenic);
  CHECK(s.nonmaximal_primes() == std::vector<Int>{Int(2)});
}

TEST_CASE("monogenic values in [-25, 25]") {
  const auto certs = scan(Int(-25), Int(25));
  REQUIRE(certs.size() == 51);
  std::set<long> found;
  for (const auto& c : certs) {
    if (c.verdict == Verdict::monogenic) found.insert(c.alpha->get_si());
  }
  CHECK(found == kMonogenicWindow);
}

TEST_CASE("scan output is independent of the thread count") {
  const auto one = scan(Int(-40), Int(40), 1);
  const auto four = scan(Int(-40), Int(40), 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(*one[i].alpha == *four[i].alpha);
    CHECK(one[i].verdict == four[i].verdict);
    CHECK(certificate_json(one[i]).dump() == certificate_json(four[i]).dump());
  }
  CHECK(scan(Int(5), Int(4)).empty());
}

TEST_CASE("curve-guided and generic certificates agree") {
  for (long a = -120; a <= 120; ++a) {
    if (a == 8 || a == -8) continue;
    const MonogenicityCertificate c = certify(Int(a));
    if (c.verdict == Verdict::hypothesis_failed) continue;
    CAPTURE(a);
    const MonogenicityCertificate g = certify_generic(Int(a));
    CHECK(c.verdict == g.verdict);
    if (c.verdict == Verdict::monogenic) {
      CHECK(*c.field_disc == Int(disc_rat(c.polynomial).get_num()));
      // Dedekind's criterion at every prime of the discriminant
      for (const auto& f : factor(Int(disc_rat(c.polynomial).get_num())).factors) {
        CHECK(dedekind_p_maximal(c.polynomial, f.prime));
      }
    }
  }
}

TEST_CASE("evidence rows at 2 and 3") {
  // alpha even: lift T - 1 at 2; alpha mod 3 chooses the lift at 3
  for (long a : {2L, 6L, 14L, -22L}) {
    const MonogenicityCertificate c = certify(Int(a));
    REQUIRE(c.primes.size() >= 2);
    CHECK(c.primes[0].p == 2);
    CHECK(c.primes[0].lift == PolyInt{Int(-1), Int(1)});
    CHECK(c.primes[1].p == 3);
  }
  CHECK(certify(Int(3)).primes[0].p == 3);
  CHECK(certify(Int(3)).primes[0].lift == PolyInt{Int(0), Int(1)});
  CHECK(certify(Int(5)).primes[0].lift == PolyInt{Int(4), Int(1)});
  CHECK(certify(Int(7)).primes[0].lift == PolyInt{Int(-4), Int(1)});
}

TEST_CASE("Galois groups of quartics") {
  CHECK(quartic_galois(PolyInt{Int(1), Int(0), Int(0), Int(0), Int(1)}).group == "V4");
  CHECK(quartic_galois(PolyInt{Int(-2), Int(0), Int(0), Int(0), Int(1)}).group == "D4/C4");
  CHECK(quartic_galois(PolyInt{Int(12), Int(8), Int(0), Int(0), Int(1)}).group == "A4");
  CHECK(quartic_galois(PolyInt{Int(5), Int(0), Int(5), Int(0), Int(1)}).group == "D4/C4");
  CHECK(quartic_galois(PolyInt{Int(-2), Int(0), Int(0), Int(0), Int(1)}).real_roots == 2);
  CHECK(quartic_galois(PolyInt{Int(1), Int(0), Int(0), Int(0), Int(1)}).real_roots == 0);
  CHECK_THROWS_AS(quartic_galois(PolyInt{Int(-1), Int(0), Int(0), Int(0), Int(1)}), MathError);

  const GaloisSignature s = galois_signature(Int(9));
  CHECK(s.group == "S4");
  CHECK(s.real_roots == 2);
  // (y + 2)^3 + 64 - alpha^2
  CHECK(s.resolvent == PolyInt{Int(72 - 81), Int(12), Int(6), Int(1)});
  CHECK(galois_signature(Int(24)).group == "D4/C4");
  CHECK(galois_signature(Int(0)).group == "D4/C4");
  CHECK(galois_signature(Int(40)).group == "S4");
}

TEST_CASE("the unit 1 + (alpha/3) T + 2T^2") {
  CHECK_THROWS_AS(unit_norm_check(Int(4)), std::invalid_argument);
  for (long a = -300; a <= 300; a += 3) {
    if (!quartic_irreducible(fueter_cubic_quartic(Int(a)))) continue;
    const Int n = unit_norm_check(Int(a));
    CHECK((n == 1 || n == -1));
    if (a % 7 != 0) continue;
    const PolyRat g{Rat(1), Rat(a / 3), Rat(2)};
    CHECK(Rat(n) == testing::norm_by_matrix(to_rat(fueter_cubic_quartic(Int(a))), g));
  }
}

TEST_CASE("families") {
  CHECK(parse_family("A") == Family::A);
  CHECK(to_string(Family::C) == "C");
  CHECK_THROWS_AS(parse_family("D"), std::invalid_argument);

  CHECK(family_disc(Family::A, Int(1), Int(2)).first == -97200);
  CHECK(family_disc(Family::B, Int(0), Int(1)).first == -7803);
  for (long a = -30; a <= 30; ++a) CHECK(family_polynomial(Family::A, Int(1), Int(a)) == fueter_cubic_quartic(Int(a)));

  for (Family f : {Family::A, Family::B, Family::C}) {
    for (long s = -5; s < 5; ++s) {
      for (long t = -5; t < 5; ++t) {
        const PolyInt p = family_polynomial(f, Int(s), Int(t));
        CHECK(p.is_monic());
        CHECK(p.degree() == 4);
        const auto [disc, q] = family_disc(f, Int(s), Int(t));
        CHECK(testing::sylvester_discriminant(to_rat(p)) == Rat(disc));
        if (q != 0) CHECK(mod(disc, q * q) == 0);
      }
    }
  }
}

TEST_CASE("family survey") {
  const auto entries = survey_family(Family::C, Int(-2), Int(2), Int(-3), Int(3), 2);
  REQUIRE(entries.size() == 35);
  int certified = 0;
  for (const auto& e : entries) {
    CHECK(e.disc_matches());
    if (!e.certificate) continue;
    ++certified;
    CHECK(is_squarefree(e.squared_factor));
    if (e.certificate->verdict == Verdict::monogenic) {
      CHECK(*e.certificate->field_disc == e.computed_disc);
    }
  }
  CHECK(certified > 0);
  const auto again = survey_family(Family::C, Int(-2), Int(2), Int(-3), Int(3), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) CHECK(family_entry_json(entries[i]).dump() == family_entry_json(again[i]).dump());
}

TEST_CASE("certificate JSON") {
  const Json j = certificate_json(certify(Int(2)));
  CHECK(j["version"] == 1);
  CHECK(j["alpha"] == 2);
  CHECK(j["verdict"] == "monogenic");
  CHECK(j["hypothesis_ok"] == true);
  CHECK(j["field_disc"] == "-97200");
  REQUIRE(j["primes"].size() == 3);
  const Json& row = j["primes"][0];
  for (const char* key : {"p", "lift", "a0_val", "polygon", "ind_p", "exact", "dedekind"}) CHECK(row.contains(key));
  CHECK(row["ind_p"] == 0);
  CHECK(j["trust"].is_array());
  CHECK(j["reduction"].size() == 3);
  CHECK(j["reduction"][0]["kodaira"] == "I*_1");

  const Json h = certificate_json(certify(Int(10)));
  CHECK(h["verdict"] == "hypothesis_failed");
  CHECK(h["field_disc"].is_null());
}

TEST_CASE("budget exhaustion") {
  // alpha^2 - 64 with two 20-digit prime factors in alpha - 8
  const Int p1("100000000000000000039"), p2("100000000000000000129");
  const MonogenicityCertificate c = certify(p1 * p2 + 8, Budget::milliseconds(5));
  CHECK(c.verdict == Verdict::not_certified);
  CHECK(c.budget_exhausted);
}
