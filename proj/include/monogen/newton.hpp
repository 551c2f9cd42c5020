#pragma once

// First-order Newton polygons of phi-developments over Z_p, residual
// polynomials, the index bound they give, and Dedekind's criterion.

#include <optional>
#include <stdexcept>
#include <vector>

#include "monogen/poly.hpp"

namespace monogen {

/// phi divides Phi exactly over Z, so the development has a_0 = 0.
class ExactRoot : public MathError {
 public:
  ExactRoot() : MathError("phi divides Phi exactly (a_0 = 0)") {}
};

struct PolygonPoint {
  unsigned j = 0;
  std::optional<unsigned> v;  // empty means v_p(a_j) is infinite
};

/// A side of negative slope, left endpoint (x0, y0), right endpoint (x1, y1).
struct PolygonSide {
  unsigned x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  unsigned degree = 0;  // gcd(y0 - y1, x1 - x0)

  /// Slope as an exact rational (negative).
  Rat slope() const;
  /// Height of the side line at abscissa x (x0 <= x <= x1).
  Rat height_at(unsigned x) const;
};

struct NewtonPolygon {
  std::vector<PolygonPoint> points;
  std::vector<PolygonSide> sides;  // left to right, slopes increasing

  /// Abscissa where the negative-slope part ends (0 if there are no sides).
  unsigned length() const { return sides.empty() ? 0 : sides.back().x1; }
};

struct ResidualPolynomial {
  PolygonSide side;
  std::vector<ResidueFieldElem> coefficients;  // degree + 1 entries
};

struct PhiReport {
  PolyInt phi;
  unsigned exponent = 0;  // multiplicity of phi mod p in Phi mod p
  PhiDevelopment development;
  NewtonPolygon polygon;
  unsigned ind_phi = 0;
  bool regular = true;
  std::vector<ResidualPolynomial> residuals;
};

struct IndexReport {
  Int p;
  std::vector<PhiReport> per_phi;  // repeated factors only
  unsigned ind_p_lower_bound = 0;
  bool exact = true;
};

/// Lower convex hull of (j, v_p(a_j)) keeping the sides of negative slope.
/// Throws ExactRoot when a_0 = 0.
NewtonPolygon build_polygon(const PhiDevelopment& dev, const Int& p);

/// deg_phi times the number of lattice points (x, y) with x >= 1, y >= 1 on
/// or under the polygon.
unsigned ind_phi(const NewtonPolygon& polygon, unsigned deg_phi);

/// R_S over F_p[x]/(phi): res(j) = red(a_j / p^{v_p(a_j)}) for points of
/// the development lying on S, zero otherwise.
ResidualPolynomial residual_polynomial(const PhiDevelopment& dev, const Int& p, const PolygonSide& side);

bool is_regular(const ResidualPolynomial& r, const Int& p, const PolyInt& phi);

/// Factors Phi mod p, develops Phi around a lift of every repeated factor,
/// and sums ind_phi. `lifts` overrides the default least-residue lifts; each
/// supplied lift must be monic and reduce to one of the irreducible factors,
/// otherwise std::invalid_argument is thrown.
IndexReport index_report(const PolyInt& Phi, const Int& p, const std::vector<PolyInt>& lifts = {});

/// Dedekind's criterion: true iff p does not divide [O : Z[theta]].
bool dedekind_p_maximal(const PolyInt& Phi, const Int& p);

}  // namespace monogen
