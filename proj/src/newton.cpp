#include "monogen/newton.hpp"

#include <numeric>

namespace monogen {

Rat PolygonSide::slope() const {
  Rat s(-Int(y0 - y1), Int(x1 - x0));
  s.canonicalize();
  return s;
}

Rat PolygonSide::height_at(unsigned x) const {
  Rat h = Rat(Int(y0)) + slope() * Rat(Int(x - x0));
  h.canonicalize();
  return h;
}

namespace {

// cross product of (b - a) and (c - a); <= 0 means b is not strictly below ac
long cross(long ax, long ay, long bx, long by, long cx, long cy) {
  return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

PolyInt strip_p_power(const PolyInt& f, const Int& p, unsigned v) {
  const Int scale = pow(p, v);
  std::vector<Int> c(f.coeffs());
  for (auto& x : c) x /= scale;
  return PolyInt(std::move(c));
}

}  // namespace

NewtonPolygon build_polygon(const PhiDevelopment& dev, const Int& p) {
  if (dev.terms.empty() || dev.terms[0].is_zero()) throw ExactRoot();
  NewtonPolygon poly;
  std::vector<std::pair<long, long>> finite;
  for (unsigned j = 0; j < dev.terms.size(); ++j) {
    PolygonPoint pt{j, std::nullopt};
    if (!dev.terms[j].is_zero()) {
      pt.v = vp(dev.terms[j], p);
      finite.emplace_back(j, *pt.v);
    }
    poly.points.push_back(pt);
  }
  std::vector<std::pair<long, long>> hull;
  for (const auto& pt : finite) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      if (cross(a.first, a.second, b.first, b.second, pt.first, pt.second) <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto& [x0, y0] = hull[i];
    const auto& [x1, y1] = hull[i + 1];
    if (y1 >= y0) break;
    PolygonSide side;
    side.x0 = static_cast<unsigned>(x0);
    side.y0 = static_cast<unsigned>(y0);
    side.x1 = static_cast<unsigned>(x1);
    side.y1 = static_cast<unsigned>(y1);
    side.degree = static_cast<unsigned>(std::gcd(y0 - y1, x1 - x0));
    poly.sides.push_back(side);
  }
  return poly;
}

unsigned ind_phi(const NewtonPolygon& polygon, unsigned deg_phi) {
  unsigned count = 0;
  for (const auto& side : polygon.sides) {
    for (unsigned x = std::max(side.x0 + 1, 1U); x <= side.x1; ++x) {
      const Rat h = side.height_at(x);
      Int fl = floor_div(Int(h.get_num()), Int(h.get_den()));
      if (fl >= 1) count += static_cast<unsigned>(fl.get_ui());
    }
  }
  return deg_phi * count;
}

ResidualPolynomial residual_polynomial(const PhiDevelopment& dev, const Int& p, const PolygonSide& side) {
  const ResidueField field(PolyModP::reduce(dev.phi, p));
  ResidualPolynomial out{side, {}};
  const unsigned run = (side.x1 - side.x0) / side.degree;
  const unsigned drop = (side.y0 - side.y1) / side.degree;
  for (unsigned i = 0; i <= side.degree; ++i) {
    const unsigned j = side.x0 + i * run;
    const unsigned expected = side.y0 - i * drop;
    ResidueFieldElem elem{field.zero()};
    if (j < dev.terms.size() && !dev.terms[j].is_zero() && vp(dev.terms[j], p) == expected) {
      elem.value = field.reduce(strip_p_power(dev.terms[j], p, expected));
    }
    out.coefficients.push_back(std::move(elem));
  }
  return out;
}

bool is_regular(const ResidualPolynomial& r, const Int& p, const PolyInt& phi) {
  if (r.side.degree <= 1) return true;
  const ResidueField field(PolyModP::reduce(phi, p));
  ResiduePoly coeffs;
  for (const auto& c : r.coefficients) coeffs.push_back(c.value);
  return is_separable(field, coeffs);
}

IndexReport index_report(const PolyInt& Phi, const Int& p, const std::vector<PolyInt>& lifts) {
  if (!Phi.is_monic()) throw std::invalid_argument("index_report: Phi must be monic");
  IndexReport report;
  report.p = p;
  const auto factors = factor_mod_p(PolyModP::reduce(Phi, p));

  for (const auto& lift : lifts) {
    const bool ok = lift.is_monic() && std::any_of(factors.begin(), factors.end(), [&](const ModPFactor& f) {
                      return PolyModP::reduce(lift, p) == f.factor;
                    });
    if (!ok) {
      throw std::invalid_argument("index_report: lift " + format_poly(lift) +
                                  " is not congruent to an irreducible factor mod " + to_string(p));
    }
  }

  for (const auto& [fbar, e] : factors) {
    if (e < 2) continue;
    std::optional<PolyInt> supplied;
    for (const auto& lift : lifts) {
      if (PolyModP::reduce(lift, p) == fbar) supplied = lift;
    }
    PolyInt phi = supplied ? *supplied : fbar.lift();
    PhiDevelopment dev = phi_development(Phi, phi);
    // a default lift that happens to divide Phi exactly is shifted by p
    while (!supplied && dev.terms[0].is_zero()) {
      phi = phi + PolyInt::constant(p);
      dev = phi_development(Phi, phi);
    }
    PhiReport row;
    row.phi = phi;
    row.exponent = e;
    row.polygon = build_polygon(dev, p);
    row.ind_phi = ind_phi(row.polygon, static_cast<unsigned>(phi.degree()));
    for (const auto& side : row.polygon.sides) {
      ResidualPolynomial r = residual_polynomial(dev, p, side);
      if (!is_regular(r, p, phi)) row.regular = false;
      row.residuals.push_back(std::move(r));
    }
    row.development = std::move(dev);
    report.ind_p_lower_bound += row.ind_phi;
    report.exact = report.exact && row.regular;
    report.per_phi.push_back(std::move(row));
  }
  return report;
}

bool dedekind_p_maximal(const PolyInt& Phi, const Int& p) {
  if (!Phi.is_monic()) throw std::invalid_argument("dedekind_p_maximal: Phi must be monic");
  const PolyModP Phibar = PolyModP::reduce(Phi, p);
  PolyModP gbar = PolyModP::constant(p, 1);
  for (const auto& f : factor_mod_p(Phibar)) gbar = gbar * f.factor;
  const PolyModP hbar = divrem(Phibar, gbar).first;
  const PolyInt g = gbar.lift();
  const PolyInt h = hbar.lift();
  const PolyInt diff = g * h - Phi;
  std::vector<Int> c(diff.coeffs());
  for (auto& v : c) {
    if (!mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) throw std::logic_error("dedekind: g*h != Phi mod p");
    v /= p;
  }
  const PolyModP Fbar = PolyModP::reduce(PolyInt(std::move(c)), p);
  return gcd(gcd(Fbar, gbar), hbar).degree() == 0;
}

}  // namespace monogen
