#include <doctest.h>

#include <thread>

#include "monogen/elliptic.hpp"
#include "support.hpp"

using namespace monogen;

namespace {

Rat rpow(Rat b, unsigned e) {
  Rat r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

// Psi_n at an affine point: even n carry the factor 2y + a1 x + a3.
Rat psi_at(const WeierstrassCurve& e, unsigned n, const testing::Point& P) {
  if (n == 0) return 0;
  const DivisionPoly d = psi(e, n);
  Rat v = d.poly(P.x);
  if (d.even_part) v *= 2 * P.y + e.a1 * P.x + e.a3;
  return v;
}

// Curve through a chosen point (x0, y0) with random a1..a4.
std::pair<WeierstrassCurve, testing::Point> random_curve_with_point(testing::Rng& rng) {
  for (;;) {
    const Rat a1 = rng.integer(-3, 3), a2 = rng.integer(-3, 3), a3 = rng.integer(-3, 3), a4 = rng.integer(-5, 5);
    const Rat x0 = rng.integer(-4, 4), y0 = rng.integer(-4, 4);
    const Rat a6 = y0 * y0 + a1 * x0 * y0 + a3 * y0 - x0 * x0 * x0 - a2 * x0 * x0 - a4 * x0;
    try {
      const WeierstrassCurve e = WeierstrassCurve::from_a_invariants(a1, a2, a3, a4, a6);
      return {e, testing::Point{false, x0, y0}};
    } catch (const MathError&) {
    }
  }
}

}  // namespace

TEST_CASE("Tate normal form invariants") {
  const TateNormalCurve c21 = tate_curve(Int(2), Int(1));
  CHECK(c21.a == 10);
  CHECK(c21.weierstrass.delta == Rat(-60000000));
  CHECK(tate_curve(Int(0), Int(1)).weierstrass.delta == Rat(-16777216));
  CHECK_THROWS_AS(tate_curve(Int(8), Int(1)), MathError);
  CHECK_THROWS_AS(tate_curve(Int(-16), Int(2)), MathError);
  CHECK_THROWS_AS(tate_curve(Int(4), Int(2)), MathError);

  testing::Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const auto [alpha, beta] = rng.tate_parameters(60);
    const TateNormalCurve c = tate_curve(alpha, beta);
    const WeierstrassCurve& e = c.weierstrass;
    const Int a = alpha + 8 * beta;
    CHECK(e.a1 == Rat(a));
    CHECK(e.a2 == Rat(beta * a));
    CHECK(e.a3 == Rat(beta * a * a));
    CHECK(e.a4 == 0);
    CHECK(e.a6 == 0);
    CHECK(4 * e.b8 == e.b2 * e.b6 - e.b4 * e.b4);
    const Int b4 = pow(beta, 4);
    CHECK(e.delta == Rat(b4 * (alpha - 8 * beta) * pow(a, 7)));
    Rat j(pow(Int(alpha * alpha - 48 * beta * beta), 3), Int(b4 * (alpha - 8 * beta) * a));
    j.canonicalize();
    CHECK(e.j == j);
  }
}

TEST_CASE("x <-> T") {
  const TateNormalCurve c = tate_curve(Int(2), Int(1));
  CHECK(T_to_x(Rat(1), c) == 0);
  CHECK(T_to_x(Rat(-1), c) == -20);
  CHECK_THROWS_AS(T_to_x(Rat(0), c), MathError);
  CHECK_THROWS_AS(x_to_T(Rat(-10), c), MathError);
  testing::Rng rng(42);
  for (int i = 0; i < 20; ++i) {
    const Rat T = rng.nonzero_rational(50);
    CHECK(x_to_T(T_to_x(T, c), c) == T);
  }
}

TEST_CASE("division polynomials at the 4-torsion point") {
  testing::Rng rng(43);
  for (int i = 0; i < 3; ++i) {
    const auto [alpha, beta] = rng.tate_parameters(20);
    const TateNormalCurve c = tate_curve(alpha, beta);
    const Int a = c.a;
    CHECK(psi(c.weierstrass, 3).poly(Rat(0)) == Rat(pow(beta, 3) * pow(a, 5)));
    CHECK(psi(c.weierstrass, 4).poly(Rat(0)) == 0);
  }
  const TateNormalCurve c = tate_curve(Int(2), Int(1));
  for (unsigned n = 1; n <= 40; ++n) {
    CAPTURE(n);
    CHECK((psi(c.weierstrass, n).poly(Rat(0)) == 0) == (n % 4 == 0));
  }
}

TEST_CASE("division polynomial closed forms") {
  const TateNormalCurve c = tate_curve(Int(5), Int(3));
  const WeierstrassCurve& e = c.weierstrass;
  CHECK(psi(e, 1).poly == PolyRat::constant(Rat(1)));
  CHECK(psi(e, 2).even_part);
  CHECK(psi(e, 2).poly == PolyRat::constant(Rat(1)));
  CHECK(psi(e, 3).poly == PolyRat{e.b8, 3 * e.b6, 3 * e.b4, e.b2, Rat(3)});
  for (unsigned n = 1; n <= 11; n += 2) {
    CHECK(psi(e, n).poly.degree() == int((n * n - 1) / 2));
    CHECK(psi(e, n).poly.leading() == Rat(Int(n)));
  }
  for (unsigned n = 2; n <= 12; n += 2) {
    CHECK(psi(e, n).poly.degree() == int((n * n - 4) / 2));
  }
}

TEST_CASE("division polynomials agree with the group law") {
  testing::Rng rng(44);
  for (int i = 0; i < 5; ++i) {
    const auto [e, P] = random_curve_with_point(rng);
    REQUIRE(testing::on_curve(e, P));
    testing::Point nP = P;
    for (unsigned n = 2; n <= 9; ++n) {
      nP = testing::add(e, nP, P);
      const Rat psin = psi_at(e, n, P);
      if (nP.infinity) {
        CHECK(psin == 0);
        break;
      }
      REQUIRE(psin != 0);
      const Rat expected = P.x - psi_at(e, n - 1, P) * psi_at(e, n + 1, P) / (psin * psin);
      CAPTURE(n);
      CHECK(nP.x == expected);
    }
  }
}

TEST_CASE("Fueter polynomials") {
  const TateNormalCurve c = tate_curve(Int(2), Int(1));
  CHECK(fueter(c.fueter, 3).poly == PolyRat{Rat(-3), Rat(-2), Rat(-6), Rat(0), Rat(1)});
  CHECK_FALSE(fueter(c.fueter, 3).even_part);

  // f_4 is monic: T^6 + (c/2) T^5 + 5T^4 - 5T^2 - (c/2) T - 1, and F_4 = 2 F_2 f_4
  const TateNormalCurve g = tate_curve(Int(7), Int(3));
  const Rat cc(7, 3);
  const DivisionPoly f4 = fueter(g.fueter, 4);
  CHECK(f4.even_part);
  CHECK(f4.scale == 2);
  CHECK(f4.poly == PolyRat{Rat(-1), Rat(-cc / 2), Rat(-5), Rat(0), Rat(5), Rat(cc / 2), Rat(1)});

  for (unsigned n = 3; n <= 11; n += 2) {
    const DivisionPoly f = fueter(g.fueter, n);
    CHECK(f.poly.degree() == int((n * n - 1) / 2));
    CHECK(f.poly.is_monic());
  }
  for (unsigned n = 4; n <= 12; n += 2) {
    const DivisionPoly f = fueter(g.fueter, n);
    CHECK(f.poly.degree() == int((n * n - 4) / 2));
    CHECK(f.poly.is_monic());
    CHECK(f.scale == Rat(n / 2));
  }
  // odd F_n have integer coefficients when beta = 1; even ones need not
  for (unsigned n = 1; n <= 13; n += 2) {
    const DivisionPoly f = fueter(c.fueter, n);
    for (const auto& v : f.poly.coeffs()) CHECK(v.get_den() == 1);
  }
  const DivisionPoly f6 = fueter(c.fueter, 6);
  CHECK(std::any_of(f6.poly.coeffs().begin(), f6.poly.coeffs().end(), [](const Rat& v) { return v.get_den() != 1; }));
}

TEST_CASE("Psi_n and F_n correspond under the change of variables") {
  const TateNormalCurve c = tate_curve(Int(2), Int(1));
  CHECK(psi_fueter_identity_check(c, 3, Rat(2)));
  CHECK(psi_fueter_identity_check(c, 1, Rat(5, 7)));
  CHECK_THROWS(psi_fueter_identity_check(c, 4, Rat(2)));
  testing::Rng rng(45);
  for (int i = 0; i < 4; ++i) {
    const auto [alpha, beta] = rng.tate_parameters(30);
    const TateNormalCurve t = tate_curve(alpha, beta);
    for (unsigned n : {3u, 5u, 7u, 9u}) {
      for (int k = 0; k < 5; ++k) CHECK(psi_fueter_identity_check(t, n, rng.nonzero_rational(40)));
    }
  }
}

TEST_CASE("Psi_n recovered from F_n as polynomials") {
  // Psi_n(x) = (-1)^{(n-1)/2} sum_k f_k (a beta)^k (x + a beta)^{d - k}
  testing::Rng rng(46);
  for (int i = 0; i < 3; ++i) {
    const auto [alpha, beta] = rng.tate_parameters(25);
    const TateNormalCurve t = tate_curve(alpha, beta);
    const Rat ab(t.a * beta);
    for (unsigned n : {3u, 5u, 7u, 9u}) {
      const PolyRat f = fueter(t.fueter, n).poly;
      const unsigned d = (n * n - 1) / 2;
      const PolyRat shift{ab, Rat(1)};
      PolyRat acc;
      for (unsigned k = 0; k <= d; ++k) acc += (f.coeff(k) * rpow(ab, k)) * shift.pow(d - k);
      if (((n - 1) / 2) % 2 == 1) acc = -acc;
      CHECK(acc == psi(t.weierstrass, n).poly);
    }
  }
}

TEST_CASE("point doubling") {
  const TateNormalCurve c = tate_curve(Int(2), Int(1));
  CHECK(double_x(c.weierstrass, Rat(0)) == -10);
  CHECK_THROWS_AS(double_x(c.weierstrass, Rat(-10)), MathError);

  const TateNormalCurve m = tate_curve(Int(13), Int(1));
  const Rat d = double_x(m.weierstrass, Rat(-32));
  const Int five(5);
  CHECK(vp(d.get_den(), five) == 0);
  CHECK(mod(Int(d.get_num()) * inverse_mod(Int(d.get_den()), five), five) == mod(Int(-16), five));

  testing::Rng rng(47);
  for (int i = 0; i < 10; ++i) {
    const auto [e, P] = random_curve_with_point(rng);
    const testing::Point Q = testing::add(e, P, P);
    if (Q.infinity) continue;
    CHECK(double_x(e, P.x) == Q.x);
  }
}

TEST_CASE("discriminant closed forms") {
  const Rat delta(-60000000);
  CHECK(verdure_disc(3, delta) == -27 * delta * delta);
  CHECK(verdure_disc(5, delta) == rpow(Rat(5), 11) * rpow(delta, 22));
  for (long alpha : {-7, 2, 13}) {
    const Int a(alpha);
    CHECK(fueter_disc(3, a, Int(1)) == Rat(-27 * (a - 8) * (a - 8) * (a + 8) * (a + 8)));
  }
  CHECK_THROWS(fueter_disc(4, Int(2), Int(1)));
}

TEST_CASE("discriminants of odd Psi_n and F_n") {
  testing::Rng rng(48);
  for (int i = 0; i < 3; ++i) {
    const auto [e, P] = random_curve_with_point(rng);
    for (unsigned n : {3u, 5u, 7u, 9u}) CHECK(discriminant(psi(e, n).poly) == verdure_disc(n, e.delta));
  }
  for (int i = 0; i < 3; ++i) {
    const auto [alpha, beta] = rng.tate_parameters(20);
    const TateNormalCurve t = tate_curve(alpha, beta);
    for (unsigned n : {3u, 5u, 7u}) CHECK(discriminant(fueter(t.fueter, n).poly) == fueter_disc(n, alpha, beta));
  }
}

TEST_CASE("memo cap and concurrent access") {
  const TateNormalCurve small = tate_curve(Int(3), Int(2), 6);
  const TateNormalCurve large = tate_curve(Int(3), Int(2));
  for (unsigned n = 1; n <= 14; ++n) {
    CHECK(psi(small.weierstrass, n).poly == psi(large.weierstrass, n).poly);
    CHECK(fueter(small.fueter, n).poly == fueter(large.fueter, n).poly);
  }

  const TateNormalCurve shared = tate_curve(Int(11), Int(5));
  std::vector<std::vector<PolyRat>> seen(4);
  std::vector<std::thread> threads;
  for (std::size_t k = 0; k < seen.size(); ++k) {
    threads.emplace_back([&, k] {
      for (unsigned n = 16; n >= 1; --n) seen[k].push_back(psi(shared.weierstrass, n + static_cast<unsigned>(k) % 2).poly);
    });
  }
  for (auto& t : threads) t.join();
  CHECK(seen[0] == seen[2]);
  CHECK(seen[1] == seen[3]);
  CHECK(seen[0].back() == psi(large.weierstrass, 1).poly);
}
