#include "logamoeba/serialize.hpp"

#include <fstream>
#include <sstream>

#include "logamoeba/error.hpp"

namespace logamoeba {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

double number(const json& j, const char* key, double fallback, bool required) {
  if (!j.contains(key)) {
    if (required) bad(std::string("missing field \"") + key + "\"");
    return fallback;
  }
  if (!j.at(key).is_number()) bad(std::string("field \"") + key + "\" must be a number");
  return j.at(key).get<double>();
}

int integer(const json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  if (!j.at(key).is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
  return j.at(key).get<int>();
}

json complex_json(cplx c) { return {{"re", c.real()}, {"im", c.imag()}}; }

}  // namespace

json to_json(const BivariateLaurent& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"a", e.a}, {"b", e.b}, {"re", c.real()}, {"im", c.imag()}});
  return {{"terms", terms}};
}

BivariateLaurent polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    bad("polynomial must be an object with a \"terms\" array");
  BivariateLaurent f;
  for (const json& t : j.at("terms")) {
    if (!t.is_object()) bad("polynomial term must be an object");
    const Exponent e{integer(t, "a"), integer(t, "b")};
    const cplx c(number(t, "re", 0.0, true), number(t, "im", 0.0, false));
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) bad("coefficient is not finite");
    f.add_term(e, c);
  }
  return f;
}

json to_json(const FamilyTemplate& t) { return {{"base", to_json(t.base)}, {"slope", to_json(t.slope)}}; }

FamilyTemplate template_from_json(const json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("slope"))
    bad("template must have \"base\" and \"slope\" polynomials");
  return {polynomial_from_json(j.at("base")), polynomial_from_json(j.at("slope"))};
}

std::vector<BivariateLaurent> components_from_json(const json& j) {
  if (!j.is_object() || !j.contains("components") || !j.at("components").is_array())
    bad("expected an object with a \"components\" array");
  std::vector<BivariateLaurent> out;
  for (const json& c : j.at("components")) out.push_back(polynomial_from_json(c));
  return out;
}

json to_json(const std::vector<LineSpec>& lines) {
  json arr = json::array();
  for (const auto& L : lines) {
    arr.push_back({{"a_re", L.a.real()},
                   {"a_im", L.a.imag()},
                   {"b_re", L.b.real()},
                   {"b_im", L.b.imag()},
                   {"family", to_string(L.family)},
                   {"theta", L.theta},
                   {"rho", L.rho}});
  }
  return arr;
}

std::vector<LineSpec> arrangement_from_json(const json& j) {
  if (!j.is_array()) bad("arrangement must be an array of lines");
  std::vector<LineSpec> out;
  for (const json& l : j) {
    if (!l.is_object()) bad("line must be an object");
    LineSpec L;
    L.a = {number(l, "a_re", 0.0, true), number(l, "a_im", 0.0, false)};
    L.b = {number(l, "b_re", 0.0, true), number(l, "b_im", 0.0, false)};
    if (L.a == 0.0 && L.b == 0.0) bad("line with a = b = 0");
    L.family = l.contains("family") ? line_family_from_string(l.at("family").get<std::string>()) : LineFamily::custom;
    L.theta = number(l, "theta", 0.0, false);
    L.rho = number(l, "rho", 1.0, false);
    out.push_back(L);
  }
  return out;
}

json to_json(const ProjPoint& p) {
  return {{"u_re", p.u().real()}, {"u_im", p.u().imag()}, {"v_re", p.v().real()}, {"v_im", p.v().imag()}};
}

json to_json(const DivisorCP1& D) {
  json entries = json::array();
  for (const auto& e : D.entries()) {
    json x = to_json(e.point);
    x["mult"] = e.multiplicity;
    entries.push_back(x);
  }
  return {{"degree", D.degree()}, {"entries", entries}};
}

DivisorCP1 divisor_from_json(const json& j, double tol) {
  if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array())
    bad("divisor must have an \"entries\" array");
  DivisorCP1 D;
  for (const json& e : j.at("entries")) {
    const cplx u(number(e, "u_re", 0.0, true), number(e, "u_im", 0.0, false));
    const cplx v(number(e, "v_re", 0.0, true), number(e, "v_im", 0.0, false));
    const int mult = integer(e, "mult");
    if (mult < 1) bad("divisor multiplicity must be positive");
    D.add(ProjPoint(u, v), mult, tol);
  }
  if (j.contains("degree") && integer(j, "degree") != D.degree()) bad("divisor degree does not match its entries");
  return D;
}

json to_json(const BinaryForm& F) {
  json c = json::array();
  for (const auto& x : F.coefficients) c.push_back(complex_json(x));
  return {{"degree", F.degree()}, {"coefficients", c}};
}

json to_json(const Diagnostic& d) { return {{"code", to_string(d.code)}, {"message", d.message}}; }

json to_json(const CriticalPointSet& crit) {
  json pts = json::array();
  for (const auto& p : crit.points) {
    pts.push_back({{"z", complex_json(p.z)},
                   {"w", complex_json(p.w)},
                   {"mult", p.multiplicity},
                   {"branch_value", to_json(p.branch_value)}});
  }
  json warn = json::array();
  for (const auto& w : crit.warnings) warn.push_back(to_json(w));
  return {{"total_multiplicity", crit.total_multiplicity},
          {"expected_degree", crit.expected_degree},
          {"points", pts},
          {"warnings", warn}};
}

json to_json(const NodalCurve& curve) {
  json nodes = json::array();
  for (const auto& n : curve.nodes) {
    nodes.push_back({{"z", complex_json(n.p.z)},
                     {"w", complex_json(n.p.w)},
                     {"v1", to_json(n.v1)},
                     {"v2", to_json(n.v2)},
                     {"sigma", n.sigma},
                     {"first", n.first},
                     {"second", n.second}});
  }
  json comps = json::array();
  for (const auto& c : curve.components) {
    json x = {{"kind", c.kind == ComponentKind::binomial ? "binomial"
                       : c.kind == ComponentKind::line   ? "line"
                                                         : "general"},
              {"polynomial", to_json(c.poly)}};
    if (c.kind == ComponentKind::binomial) x["gauss_constant"] = to_json(c.gauss_constant);
    comps.push_back(x);
  }
  return {{"components", comps},
          {"nodes", nodes},
          {"n_minus", curve.n_minus()},
          {"n_plus", curve.n_plus()},
          {"n_zero", curve.n_zero()}};
}

json to_json(const ScanResult& scan) {
  const ParameterGrid& g = scan.grid;
  json cells = json::array();
  for (const auto& c : scan.cells) {
    json x = {{"i_re", c.i_re}, {"i_im", c.i_im}, {"alpha", complex_json(c.alpha)}, {"ok", c.ok}};
    if (c.ok) {
      x["discriminantal"] = c.discriminantal;
      x["margin"] = c.margin;
      x["degree"] = c.degree;
    } else {
      x["error"] = c.error;
    }
    if (c.b0) x["b0"] = *c.b0;
    if (!c.b0_error.empty()) x["b0_error"] = c.b0_error;
    cells.push_back(x);
  }
  json out = {{"grid",
               {{"re0", g.re0}, {"re1", g.re1}, {"re_count", g.re_count}, {"im0", g.im0}, {"im1", g.im1},
                {"im_count", g.im_count}}},
              {"cells", cells}};
  if (scan.min_b0) out["min_b0"] = *scan.min_b0;
  return out;
}

json to_json(const MonodromyResult& r) {
  json out = {{"b0", r.b0}, {"permutation", r.permutation}, {"halvings", r.halvings},
              {"min_separation", r.track.min_separation}};
  if (!r.track.fibers.empty()) {
    json steps = json::array();
    for (std::size_t k = 0; k < r.track.fibers.size(); ++k) {
      json pts = json::array();
      for (const auto& p : r.track.fibers[k]) pts.push_back({{"z", complex_json(p.z)}, {"w", complex_json(p.w)}});
      steps.push_back({{"theta", r.track.direction_steps[k]}, {"fiber", pts}});
    }
    out["track"] = steps;
  }
  return out;
}

json to_json(const AmoebaImage& img) {
  json pts = json::array();
  for (const auto& s : img.samples)
    pts.push_back({{"x", s.x}, {"y", s.y}, {"kind", s.kind == SampleKind::amoeba ? "amoeba" : "contour"}});
  json skipped = json::array();
  for (const auto& d : img.skipped) skipped.push_back(to_json(d));
  return {{"window", {img.window.x0, img.window.x1, img.window.y0, img.window.y1}},
          {"columns", img.columns},
          {"angles", img.angles},
          {"samples", pts},
          {"skipped", skipped}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path);
}

}  // namespace logamoeba
