#include "monogen/json.hpp"

namespace monogen {

Json int_json(const Int& x) {
  if (fits_long(x)) return x.get_si();
  return to_string(x);
}

Json polygon_json(const NewtonPolygon& polygon, unsigned ind_phi) {
  Json points = Json::array();
  for (const auto& pt : polygon.points) {
    points.push_back(Json::array({pt.j, pt.v ? Json(*pt.v) : Json(nullptr)}));
  }
  Json sides = Json::array();
  for (const auto& s : polygon.sides) {
    sides.push_back({{"x0", s.x0},
                     {"y0", s.y0},
                     {"x1", s.x1},
                     {"y1", s.y1},
                     {"slope", to_string(s.slope())},
                     {"degree", s.degree}});
  }
  return {{"points", points}, {"sides", sides}, {"ind_phi", ind_phi}};
}

Json index_report_json(const IndexReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.per_phi) {
    Json residuals = Json::array();
    for (const auto& res : r.residuals) {
      Json coeffs = Json::array();
      for (const auto& c : res.coefficients) coeffs.push_back(format_poly(c.value));
      residuals.push_back(coeffs);
    }
    rows.push_back({{"phi", format_poly(r.phi)},
                    {"exponent", r.exponent},
                    {"polygon", polygon_json(r.polygon, r.ind_phi)},
                    {"regular", r.regular},
                    {"residuals", residuals}});
  }
  return {{"p", int_json(report.p)},
          {"phis", rows},
          {"ind_p", report.ind_p_lower_bound},
          {"exact", report.exact}};
}

Json reduction_json(const ReductionData& r) {
  Json j = {{"p", int_json(r.p)}, {"kodaira", r.kodaira.name()}};
  j["f"] = r.f ? Json(*r.f) : Json(nullptr);
  j["c"] = r.c ? Json(*r.c) : Json(nullptr);
  j["case"] = r.case_tag;
  return j;
}

Json certificate_json(const MonogenicityCertificate& cert) {
  Json j;
  j["version"] = 1;
  if (cert.alpha) {
    j["alpha"] = int_json(*cert.alpha);
  } else {
    j["polynomial"] = format_poly(cert.polynomial);
  }
  j["verdict"] = to_string(cert.verdict);
  j["hypothesis_ok"] = cert.hypothesis_ok;
  j["field_disc"] = cert.field_disc ? Json(to_string(*cert.field_disc)) : Json(nullptr);
  Json primes = Json::array();
  for (const auto& row : cert.primes) {
    Json r;
    r["p"] = int_json(row.p);
    r["lift"] = row.lift ? Json(format_poly(*row.lift)) : Json(nullptr);
    r["a0_val"] = row.a0_val ? Json(*row.a0_val) : Json(nullptr);
    if (row.polygon) {
      const unsigned deg = row.lift ? static_cast<unsigned>(row.lift->degree()) : 1;
      r["polygon"] = polygon_json(*row.polygon, ind_phi(*row.polygon, deg));
    } else {
      r["polygon"] = nullptr;
    }
    r["ind_p"] = row.ind_p;
    r["exact"] = row.exact;
    r["dedekind"] = row.dedekind;
    primes.push_back(std::move(r));
  }
  j["primes"] = primes;
  j["trust"] = cert.trust;
  if (!cert.reasons.empty()) j["reasons"] = cert.reasons;
  if (cert.reduction_corroborates) {
    Json red = Json::array();
    for (const auto& r : cert.reduction) red.push_back(reduction_json(r));
    j["reduction"] = red;
    j["reduction_corroborates"] = *cert.reduction_corroborates;
  }
  return j;
}

Json family_entry_json(const FamilyEntry& e) {
  Json j = {{"family", to_string(e.family)},
            {"s", int_json(e.s)},
            {"t", int_json(e.t)},
            {"polynomial", format_poly(e.polynomial)},
            {"predicted_disc", to_string(e.predicted_disc)},
            {"disc_matches", e.disc_matches()}};
  j["verdict"] = e.certificate ? Json(to_string(e.certificate->verdict)) : Json(nullptr);
  return j;
}

}  // namespace monogen
