// monogen: command-line front end for the monogen library.
//
// Exit codes: 0 success, 1 mathematical error, 2 usage error, 3 budget
// exhausted.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "monogen/json.hpp"

using namespace monogen;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  bool json = false;
  long budget_ms = 0;
  std::string alpha = "";
  std::string beta = "1";
  std::string prime;
  std::string poly;
  std::string phi;
  std::string a_invariants;
  unsigned n = 0;
  std::string min = "0";
  std::string max = "0";
  std::string family = "A";
  std::string s = "0";
  std::string t = "0";
  unsigned jobs = 1;
  bool generic = false;
};

Budget budget_of(const Options& o) { return o.budget_ms > 0 ? Budget::milliseconds(o.budget_ms) : Budget(); }

Int require_int(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  try {
    return parse_int(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(flag) + ": expected an integer, got '" + text + "'");
  }
}

Int require_prime(const std::string& text) {
  const Int p = require_int(text, "--prime");
  if (p < 2 || primality(p) == Primality::composite) throw UsageError("--prime: " + text + " is not prime");
  return p;
}

PolyInt require_poly(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  try {
    return parse_poly_int(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

// "lo:hi" or a single value
std::pair<Int, Int> parse_range(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const Int v = require_int(text, flag);
    return {v, v};
  }
  return {require_int(text.substr(0, colon), flag), require_int(text.substr(colon + 1), flag)};
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string poly_text(const DivisionPoly& d, const char* two) {
  std::ostringstream out;
  if (!d.even_part) return format_poly(d.poly);
  if (d.scale != 1) out << to_string(d.scale) << " * ";
  out << two << " * (" << format_poly(d.poly) << ")";
  return out.str();
}

Json poly_json(const DivisionPoly& d) {
  return {{"n", d.n}, {"even_part", d.even_part}, {"scale", to_string(d.scale)}, {"poly", format_poly(d.poly)}};
}

TateNormalCurve curve_of(const Options& o) { return tate_curve(require_int(o.alpha, "--alpha"), require_int(o.beta, "--beta")); }

int cmd_divpoly(const Options& o) {
  if (o.n == 0) throw UsageError("--n must be positive");
  WeierstrassCurve e;
  if (!o.a_invariants.empty()) {
    const PolyRat a = parse_poly_rat(o.a_invariants);
    std::vector<Rat> c(5);
    if (a.coeffs().size() > 5) throw UsageError("--a-invariants takes five values a1,a2,a3,a4,a6");
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] = a.coeffs()[i];
    e = WeierstrassCurve::from_a_invariants(c[0], c[1], c[2], c[3], c[4]);
  } else {
    e = curve_of(o).weierstrass;
  }
  const DivisionPoly d = psi(e, o.n);
  if (o.json) {
    print_json(poly_json(d));
  } else {
    std::cout << poly_text(d, "psi_2") << "\n";
  }
  return 0;
}

int cmd_fueter(const Options& o) {
  if (o.n == 0) throw UsageError("--n must be positive");
  const DivisionPoly d = fueter(curve_of(o).fueter, o.n);
  if (o.json) {
    print_json(poly_json(d));
  } else {
    std::cout << poly_text(d, "F_2") << "\n";
  }
  return 0;
}

std::string opt_text(const std::optional<unsigned>& v) { return v ? std::to_string(*v) : "-"; }

int cmd_reduce(const Options& o) {
  const Int alpha = require_int(o.alpha, "--alpha");
  const Int beta = require_int(o.beta, "--beta");
  std::vector<ReductionData> rows;
  if (!o.prime.empty()) {
    const Int p = require_prime(o.prime);
    rows.push_back(p == 2 ? classify_two(alpha, beta) : classify_odd(alpha, beta, p));
  } else {
    rows = reduction_table(alpha, beta, budget_of(o));
  }
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(reduction_json(r));
    print_json(arr);
    return 0;
  }
  std::cout << "p\tkodaira\tf\tc\tcase\n";
  for (const auto& r : rows) {
    std::cout << to_string(r.p) << "\t" << r.kodaira.name() << "\t" << opt_text(r.f) << "\t" << opt_text(r.c) << "\t"
              << r.case_tag << "\n";
  }
  return 0;
}

// Rows from the top valuation down to 0; '*' marks polygon vertices, 'o' the
// other points of the development.
std::string render_polygon(const NewtonPolygon& polygon) {
  unsigned top = 0;
  for (const auto& pt : polygon.points) {
    if (pt.v) top = std::max(top, *pt.v);
  }
  auto is_vertex = [&](unsigned j, unsigned v) {
    for (const auto& s : polygon.sides) {
      if ((s.x0 == j && s.y0 == v) || (s.x1 == j && s.y1 == v)) return true;
    }
    return false;
  };
  std::ostringstream out;
  for (unsigned y = top + 1; y-- > 0;) {
    out << (y < 10 ? " " : "") << y << " |";
    for (const auto& pt : polygon.points) {
      char c = ' ';
      if (pt.v && *pt.v == y) c = is_vertex(pt.j, y) ? '*' : 'o';
      out << ' ' << c;
    }
    out << "\n";
  }
  out << "   +";
  for (std::size_t j = 0; j < polygon.points.size(); ++j) out << "--";
  out << "\n    ";
  for (const auto& pt : polygon.points) out << ' ' << pt.j % 10;
  out << "\n";
  for (const auto& s : polygon.sides) {
    out << "side (" << s.x0 << "," << s.y0 << ")-(" << s.x1 << "," << s.y1 << ") slope " << to_string(s.slope())
        << " degree " << s.degree << "\n";
  }
  return out.str();
}

int cmd_newton(const Options& o) {
  const PolyInt Phi = require_poly(o.poly, "--poly");
  const Int p = require_prime(o.prime);
  if (!o.phi.empty()) {
    const PolyInt phi = require_poly(o.phi, "--phi");
    const PhiDevelopment dev = phi_development(Phi, phi);
    const NewtonPolygon polygon = build_polygon(dev, p);
    const unsigned ind = ind_phi(polygon, static_cast<unsigned>(phi.degree()));
    bool regular = true;
    if (PolyModP::reduce(phi, p).degree() == phi.degree() && is_irreducible(PolyModP::reduce(phi, p))) {
      for (const auto& side : polygon.sides) regular = regular && is_regular(residual_polynomial(dev, p, side), p, phi);
    }
    if (o.json) {
      Json j = polygon_json(polygon, ind);
      j["phi"] = format_poly(phi);
      Json terms = Json::array();
      for (const auto& a : dev.terms) terms.push_back(format_poly(a));
      j["development"] = terms;
      j["regular"] = regular;
      print_json(j);
    } else {
      std::cout << "phi = " << format_poly(phi) << "\n" << render_polygon(polygon) << "ind_phi " << ind << "\n";
      std::cout << "regular " << (regular ? "yes" : "no") << "\n";
    }
    return 0;
  }
  const IndexReport report = index_report(Phi, p);
  if (o.json) {
    print_json(index_report_json(report));
    return 0;
  }
  if (report.per_phi.empty()) std::cout << "no repeated factors mod " << to_string(p) << "\n";
  for (const auto& row : report.per_phi) {
    std::cout << "phi = " << format_poly(row.phi) << " (multiplicity " << row.exponent << ")\n"
              << render_polygon(row.polygon) << "ind_phi " << row.ind_phi << "\n";
  }
  return 0;
}

int cmd_index(const Options& o) {
  const PolyInt Phi = require_poly(o.poly, "--poly");
  if (o.prime.empty()) {
    const MonogenicityCertificate cert = certify_polynomial(Phi, budget_of(o));
    if (o.json) {
      print_json(certificate_json(cert));
    } else {
      for (const auto& row : cert.primes) {
        std::cout << "p=" << to_string(row.p) << "\tind_p=" << row.ind_p << "\texact=" << (row.exact ? "yes" : "no")
                  << "\tdedekind=" << (row.dedekind ? "maximal" : "non-maximal") << "\n";
      }
      std::cout << "verdict " << to_string(cert.verdict) << "\n";
    }
    return cert.budget_exhausted ? 3 : 0;
  }
  const Int p = require_prime(o.prime);
  const IndexReport report = index_report(Phi, p);
  const bool dedekind = dedekind_p_maximal(Phi, p);
  if (o.json) {
    Json j = index_report_json(report);
    j["dedekind"] = dedekind;
    print_json(j);
  } else {
    std::cout << "p=" << to_string(p) << "\tind_p=" << report.ind_p_lower_bound
              << "\texact=" << (report.exact ? "yes" : "no") << "\tdedekind=" << (dedekind ? "maximal" : "non-maximal")
              << "\n";
  }
  return 0;
}

void print_certificate_text(const MonogenicityCertificate& cert) {
  if (cert.alpha) {
    std::cout << "alpha " << to_string(*cert.alpha) << "\n";
  } else {
    std::cout << "polynomial " << format_poly(cert.polynomial) << "\n";
  }
  std::cout << "verdict " << to_string(cert.verdict) << "\n";
  if (cert.field_disc) std::cout << "field_disc " << to_string(*cert.field_disc) << "\n";
  for (const auto& row : cert.primes) {
    std::cout << "p=" << to_string(row.p) << "\tlift=" << (row.lift ? format_poly(*row.lift) : "-")
              << "\ta0_val=" << opt_text(row.a0_val) << "\tind_p=" << row.ind_p
              << "\texact=" << (row.exact ? "yes" : "no") << "\tdedekind=" << (row.dedekind ? "yes" : "no") << "\n";
  }
  for (const auto& r : cert.reasons) std::cout << "reason: " << r << "\n";
  for (const auto& t : cert.trust) std::cout << "trust: " << t << "\n";
  if (cert.reduction_corroborates) {
    std::cout << "reduction types:";
    for (const auto& r : cert.reduction) std::cout << " " << r.kodaira.name() << "@" << to_string(r.p);
    std::cout << (*cert.reduction_corroborates ? " (I_1/I*_1 only)" : " (other types present)") << "\n";
  }
}

int cmd_certify(const Options& o) {
  MonogenicityCertificate cert;
  if (!o.poly.empty()) {
    cert = certify_polynomial(require_poly(o.poly, "--poly"), budget_of(o));
  } else {
    const Int alpha = require_int(o.alpha, "--alpha");
    cert = o.generic ? certify_generic(alpha, budget_of(o)) : certify(alpha, budget_of(o));
  }
  if (o.json) {
    print_json(certificate_json(cert));
  } else {
    print_certificate_text(cert);
  }
  return cert.budget_exhausted ? 3 : 0;
}

int cmd_scan(const Options& o) {
  const Int lo = require_int(o.min, "--min");
  const Int hi = require_int(o.max, "--max");
  const auto certs = scan(lo, hi, o.jobs, o.budget_ms);
  bool exhausted = false;
  if (o.json) {
    Json arr = Json::array();
    for (const auto& c : certs) arr.push_back(certificate_json(c));
    print_json(arr);
  }
  for (const auto& c : certs) {
    exhausted = exhausted || c.budget_exhausted;
    if (!o.json) std::cout << to_string(*c.alpha) << "\t" << to_string(c.verdict) << "\n";
  }
  return exhausted ? 3 : 0;
}

int cmd_survey(const Options& o) {
  const Family family = parse_family(o.family);
  const auto [s_lo, s_hi] = parse_range(o.s, "--s");
  const auto [t_lo, t_hi] = parse_range(o.t, "--t");
  const auto entries = survey_family(family, s_lo, s_hi, t_lo, t_hi, o.jobs, o.budget_ms);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& e : entries) arr.push_back(family_entry_json(e));
    print_json(arr);
    return 0;
  }
  std::cout << "s\tt\tpolynomial\tdisc\tmatches\tverdict\n";
  for (const auto& e : entries) {
    std::cout << to_string(e.s) << "\t" << to_string(e.t) << "\t" << format_poly(e.polynomial) << "\t"
              << to_string(e.predicted_disc) << "\t" << (e.disc_matches() ? "yes" : "NO") << "\t"
              << (e.certificate ? to_string(e.certificate->verdict) : "-") << "\n";
  }
  return 0;
}

int cmd_valuation(const Options& o) {
  if (o.n == 0) throw UsageError("--n must be positive");
  const TateNormalCurve curve = curve_of(o);
  const SingularCase sc = singular_case(curve.alpha, curve.beta, require_prime(o.prime));
  const unsigned predicted = predicted_valuation(sc, o.n);
  const long predicted_f = predicted_fueter_valuation(sc, o.n);
  const unsigned observed = observed_psi_valuation(curve, sc, o.n);
  const long observed_f = observed_fueter_valuation(curve, sc, o.n);
  if (o.json) {
    print_json({{"case", to_string(sc.tag)},
                {"p", int_json(sc.p)},
                {"v", sc.v},
                {"n", o.n},
                {"singular_T", int_json(singular_T(sc, curve))},
                {"psi", {{"predicted", predicted}, {"observed", observed}}},
                {"fueter", {{"predicted", predicted_f}, {"observed", observed_f}}}});
  } else {
    std::cout << "case " << to_string(sc.tag) << " p=" << to_string(sc.p) << " v=" << sc.v << "\n"
              << "psi\tpredicted " << predicted << "\tobserved " << observed << "\n"
              << "fueter\tpredicted " << predicted_f << "\tobserved " << observed_f << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Division polynomials, Newton polygons and monogenicity certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--budget-ms", o.budget_ms, "time budget in milliseconds (0 = none)");

  auto curve_opts = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha, "curve parameter alpha");
    sub->add_option("--beta", o.beta, "curve parameter beta (default 1)");
  };
  auto* divpoly = app.add_subcommand("divpoly", "division polynomial psi_n");
  curve_opts(divpoly);
  divpoly->add_option("--a-invariants", o.a_invariants, "a1,a2,a3,a4,a6 instead of alpha/beta");
  divpoly->add_option("--n", o.n, "index n")->required();

  auto* fuet = app.add_subcommand("fueter", "Fueter polynomial F_n");
  curve_opts(fuet);
  fuet->add_option("--n", o.n, "index n")->required();

  auto* reduce = app.add_subcommand("reduce", "Kodaira types at the bad primes");
  curve_opts(reduce);
  reduce->add_option("--prime", o.prime, "single prime");

  auto* newton = app.add_subcommand("newton", "Newton polygons of a phi-development");
  newton->add_option("--poly", o.poly, "monic polynomial, ascending coefficients")->required();
  newton->add_option("--prime", o.prime, "prime p")->required();
  newton->add_option("--phi", o.phi, "monic phi to develop around");

  auto* index = app.add_subcommand("index", "p-index of Z[theta] by Montes and Dedekind");
  index->add_option("--poly", o.poly, "monic polynomial, ascending coefficients")->required();
  index->add_option("--prime", o.prime, "single prime (default: all primes dividing the discriminant)");

  auto* cert = app.add_subcommand("certify", "monogenicity certificate");
  cert->add_option("--alpha", o.alpha, "alpha in T^4 - 6T^2 - alpha T - 3");
  cert->add_option("--poly", o.poly, "arbitrary monic polynomial instead of alpha");
  cert->add_flag("--generic", o.generic, "skip the curve-guided lifts");

  auto* scan_cmd = app.add_subcommand("scan", "certify every alpha in a range");
  scan_cmd->add_option("--min", o.min, "first alpha")->required();
  scan_cmd->add_option("--max", o.max, "last alpha")->required();
  scan_cmd->add_option("--jobs", o.jobs, "worker threads");

  auto* survey = app.add_subcommand("survey", "discriminants and verdicts of a quartic family");
  survey->add_option("--family", o.family, "A, B or C")->required();
  survey->add_option("--s", o.s, "s value or lo:hi");
  survey->add_option("--t", o.t, "t value or lo:hi");
  survey->add_option("--jobs", o.jobs, "worker threads");

  auto* val = app.add_subcommand("valuation", "predicted and observed valuations at the singular point");
  curve_opts(val);
  val->add_option("--prime", o.prime, "odd prime of bad reduction")->required();
  val->add_option("--n", o.n, "odd index n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*divpoly) return cmd_divpoly(o);
    if (*fuet) return cmd_fueter(o);
    if (*reduce) return cmd_reduce(o);
    if (*newton) return cmd_newton(o);
    if (*index) return cmd_index(o);
    if (*cert) return cmd_certify(o);
    if (*scan_cmd) return cmd_scan(o);
    if (*survey) return cmd_survey(o);
    if (*val) return cmd_valuation(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InfiniteValuation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
