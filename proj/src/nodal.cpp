#include "logamoeba/nodal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "logamoeba/error.hpp"
#include "logamoeba/loggauss.hpp"

namespace logamoeba {

namespace {

double cross(cplx p, cplx q) { return p.real() * q.imag() - p.imag() * q.real(); }

double phase_of(LineFamily f) {
  switch (f) {
    case LineFamily::L2:
    case LineFamily::L4:
      return std::numbers::pi / 2;
    case LineFamily::custom:
      return std::numbers::pi / 4;
    default:
      return 0.0;
  }
}

std::string pair_text(const LineSpec& x, const LineSpec& y) {
  std::ostringstream os;
  os << to_string(x.family) << "(theta=" << x.theta << ", rho=" << x.rho << ") x " << to_string(y.family)
     << "(theta=" << y.theta << ", rho=" << y.rho << ")";
  return os.str();
}

}  // namespace

std::string to_string(LineFamily f) {
  switch (f) {
    case LineFamily::L1: return "L1";
    case LineFamily::L2: return "L2";
    case LineFamily::L3: return "L3";
    case LineFamily::L4: return "L4";
    case LineFamily::custom: return "custom";
  }
  return "custom";
}

LineFamily line_family_from_string(std::string_view s) {
  if (s == "L1") return LineFamily::L1;
  if (s == "L2") return LineFamily::L2;
  if (s == "L3") return LineFamily::L3;
  if (s == "L4") return LineFamily::L4;
  if (s == "custom") return LineFamily::custom;
  throw Error(ErrorCode::InvalidInput, "unknown line family '" + std::string(s) + "'");
}

BivariateLaurent LineSpec::polynomial() const {
  return BivariateLaurent{{{1, 0}, a}, {{0, 1}, b}, {{0, 0}, -1.0}};
}

LineSpec LineSpec::member(LineFamily family, double theta, double rho) {
  if (family == LineFamily::L1 || family == LineFamily::L2) rho = 1.0;
  const double phi = phase_of(family);
  LineSpec L;
  L.a = std::polar(rho, phi + theta);
  L.b = std::polar(rho, phi - theta);
  L.family = family;
  L.theta = theta;
  L.rho = rho;
  return L;
}

int node_sign(const ProjPoint& v1, const ProjPoint& v2, double tol) {
  const int h1 = v1.hemisphere(tol), h2 = v2.hemisphere(tol);
  if (h1 == 0 || h2 == 0) return 0;
  return h1 == h2 ? 1 : -1;
}

NodeRecord line_intersection_data(const LineSpec& first, const LineSpec& second, double tol) {
  const cplx a = first.a, b = first.b, c = second.a, d = second.b;
  const cplx det = a * d - b * c;
  const double scale = std::abs(a * d) + std::abs(b * c);
  if (std::abs(det) <= 1e-14 * scale || det == 0.0) throw Error(ErrorCode::ParallelLines, pair_text(first, second));
  NodeRecord n;
  n.p = {(d - b) / det, (a - c) / det};
  if (std::abs(d - b) <= 1e-14 * (std::abs(d) + std::abs(b)) || std::abs(c - a) <= 1e-14 * (std::abs(c) + std::abs(a)))
    throw Error(ErrorCode::NodeOnTorusBoundary, pair_text(first, second));
  n.v1 = ProjPoint(a * d - a * b, a * b - b * c);
  n.v2 = ProjPoint(c * d - b * c, a * d - c * d);
  n.sigma = node_sign(n.v1, n.v2, tol);
  return n;
}

int half_plane_sign(cplx a, cplx b, cplx c, cplx d, double tol) {
  const cplx p = a * d, q = b * c;
  const cplx dir = q - p;
  const double s1 = cross(dir, a * b - p), s2 = cross(dir, c * d - p);
  const double scale = std::abs(dir) * (std::abs(a * b) + std::abs(c * d) + std::abs(p));
  if (std::abs(s1) <= tol * scale || std::abs(s2) <= tol * scale) return 0;
  return (s1 > 0) != (s2 > 0) ? 1 : -1;
}

LineSpec sample_line(LineFamily family, const FamilyParams& params, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double theta = 0.0;
  do theta = params.epsilon * unit(rng);
  while (theta == 0.0);
  double rho = 1.0;
  if (family == LineFamily::L3) rho = params.M + unit(rng);
  if (family == LineFamily::L4) rho = params.M * params.M + unit(rng);
  return LineSpec::member(family, theta, rho);
}

int NodalCurve::n_minus() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const NodeRecord& n) { return n.sigma < 0; }));
}

int NodalCurve::n_plus() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const NodeRecord& n) { return n.sigma > 0; }));
}

int NodalCurve::n_zero() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const NodeRecord& n) { return n.sigma == 0; }));
}

BivariateLaurent NodalCurve::polynomial() const {
  BivariateLaurent f = BivariateLaurent::constant(1.0);
  for (const auto& c : components) f = f * c.poly;
  return f;
}

NodalCurve nodal_curve_from_lines(const std::vector<LineSpec>& lines, const Tolerances& tol) {
  NodalCurve C;
  for (const auto& L : lines) C.components.push_back({ComponentKind::line, L.polynomial(), ProjPoint()});
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      NodeRecord n = line_intersection_data(lines[i], lines[j], tol.real);
      n.first = static_cast<int>(i);
      n.second = static_cast<int>(j);
      C.nodes.push_back(n);
    }
  }
  return C;
}

namespace {

Component classify(const BivariateLaurent& f) {
  if (f.is_zero()) throw Error(ErrorCode::EmptyPolynomial, "zero component");
  const auto supp = f.support();
  if (supp.size() < 2) throw Error(ErrorCode::InvalidInput, "monomial component has no torus points");
  if (supp.size() == 2) {
    int a = supp[1].a - supp[0].a, b = supp[1].b - supp[0].b;
    if (std::gcd(a, b) != 1) {
      std::ostringstream os;
      os << "binomial with exponent step (" << a << ", " << b << ") is not primitive; split it into its factors";
      throw Error(ErrorCode::NotNodal, os.str());
    }
    return {ComponentKind::binomial, f, ProjPoint(static_cast<double>(a), static_cast<double>(b))};
  }
  const Exponent lo = f.min_exponents();
  const auto shifted = f.shifted({-lo.a, -lo.b}).support();
  const std::vector<Exponent> simplex{{0, 0}, {0, 1}, {1, 0}};
  if (shifted == simplex) return {ComponentKind::line, f, ProjPoint()};
  return {ComponentKind::general, f, ProjPoint()};
}

ProjPoint branch_value(const Component& c, const TorusPoint& p, const Tolerances& tol) {
  if (c.kind == ComponentKind::binomial) return c.gauss_constant;
  return gauss(c.poly, p.z, p.w, tol);
}

}  // namespace

NodalCurve nodal_curve_from_components(const std::vector<BivariateLaurent>& components, const Tolerances& tol) {
  NodalCurve C;
  for (const auto& f : components) C.components.push_back(classify(f));
  for (std::size_t i = 0; i < C.components.size(); ++i) {
    for (std::size_t j = i + 1; j < C.components.size(); ++j) {
      const SystemResult sr = solve_torus_system(C.components[i].poly, C.components[j].poly, tol);
      for (const auto& s : sr.solutions) {
        if (s.multiplicity != 1) {
          std::ostringstream os;
          os << "components " << i << " and " << j << " meet with multiplicity " << s.multiplicity;
          throw Error(ErrorCode::NotNodal, os.str());
        }
        NodeRecord n;
        n.p = {s.z, s.w};
        n.v1 = branch_value(C.components[i], n.p, tol);
        n.v2 = branch_value(C.components[j], n.p, tol);
        n.sigma = node_sign(n.v1, n.v2, tol.real);
        n.first = static_cast<int>(i);
        n.second = static_cast<int>(j);
        C.nodes.push_back(n);
      }
    }
  }
  return C;
}

DivisorCP1 extended_ll(const NodalCurve& curve, const Tolerances& tol) {
  const int k = static_cast<int>(curve.components.size());
  std::vector<std::vector<ProjPoint>> node_values(k);
  for (const auto& n : curve.nodes) {
    if (n.first < 0 || n.first >= k || n.second < 0 || n.second >= k)
      throw Error(ErrorCode::NotNodal, "node refers to a missing component");
    node_values[n.first].push_back(n.v1);
    node_values[n.second].push_back(n.v2);
  }
  DivisorCP1 D;
  for (int c = 0; c < k; ++c) {
    const Component& comp = curve.components[c];
    const int s = static_cast<int>(node_values[c].size());
    if (comp.kind == ComponentKind::binomial) {
      if (s == 0) throw Error(ErrorCode::NotNodal, "binomial component meets no other component");
      D.add(comp.gauss_constant, 3 * s - 2, tol.projective);
      continue;
    }
    if (comp.kind == ComponentKind::general) D.add(push_forward(critical_points(comp.poly, tol), tol.projective), tol.projective);
    for (const auto& v : node_values[c]) D.add(v, 3, tol.projective);
  }
  return D;
}

int predicted_b0(const NodalCurve& curve, int b0_of_components) {
  for (const auto& n : curve.nodes) {
    if (n.sigma == 0) {
      std::ostringstream os;
      os << "node at (" << n.p.z << ", " << n.p.w << ") has a real branch value";
      throw Error(ErrorCode::ZeroSignNode, os.str());
    }
  }
  return b0_of_components + curve.n_minus() + 2 * curve.n_plus();
}

std::vector<LineSpec> construct_arrangement(int d, int n, const FamilyParams& params, std::uint64_t seed, int retries) {
  const int pairs = d * (d - 1) / 2;
  if (d < 1 || n < 0 || n > pairs) {
    std::ostringstream os;
    os << "need d >= 1 and 0 <= n <= d(d-1)/2, got d = " << d << ", n = " << n;
    throw Error(ErrorCode::InvalidInput, os.str());
  }
  std::vector<LineFamily> plan;
  if (n == pairs) {
    plan.assign(d, LineFamily::L1);
  } else if (n == 0) {
    plan.assign(d, LineFamily::L4);
  } else {
    int m = 1;
    while ((m + 1) * m / 2 <= n) ++m;
    const int r = n - m * (m - 1) / 2;
    plan.insert(plan.end(), m - r, LineFamily::L1);
    plan.insert(plan.end(), r, LineFamily::L2);
    plan.push_back(LineFamily::L3);
    plan.insert(plan.end(), d - m - 1, LineFamily::custom);
  }

  const double min_angle = params.epsilon / (4.0 * d);
  std::mt19937_64 rng(seed);
  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<LineSpec> lines;
    int custom_index = 0;
    for (LineFamily f : plan) {
      LineSpec L = sample_line(f, params, rng);
      if (f == LineFamily::custom) L = LineSpec::member(f, L.theta, params.M * params.M * std::ldexp(1.0, custom_index++));
      lines.push_back(L);
    }
    bool ok = true;
    int negatives = 0;
    for (std::size_t i = 0; i < lines.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < lines.size() && ok; ++j) {
        try {
          const cplx ad = lines[i].a * lines[j].b, bc = lines[i].b * lines[j].a;
          if (std::abs(ad - bc) < min_angle * (std::abs(ad) + std::abs(bc))) {
            ok = false;
            last_failure = "nearly parallel pair " + pair_text(lines[i], lines[j]);
            break;
          }
          const NodeRecord node = line_intersection_data(lines[i], lines[j], params.sign_margin);
          if (node.sigma == 0) {
            ok = false;
            last_failure = "sign margin below threshold for " + pair_text(lines[i], lines[j]);
          }
          if (node.sigma < 0) ++negatives;
        } catch (const Error& e) {
          ok = false;
          last_failure = std::string(e.what()) + " for " + pair_text(lines[i], lines[j]);
        }
      }
    }
    if (ok && negatives != n) {
      ok = false;
      std::ostringstream os;
      os << negatives << " negative nodes instead of " << n;
      last_failure = os.str();
    }
    if (ok) return lines;
  }
  throw Error(ErrorCode::SignVerificationFailed, last_failure);
}

namespace {

std::vector<TorusPoint> arrangement_nodes(const std::vector<LineSpec>& lines) {
  std::vector<TorusPoint> nodes;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) nodes.push_back(line_intersection_data(lines[i], lines[j]).p);
  return nodes;
}

}  // namespace

double node_scale(const std::vector<LineSpec>& lines) {
  const auto nodes = arrangement_nodes(lines);
  if (nodes.empty()) return 1.0;
  double acc = 0.0;
  for (const auto& p : nodes) acc += std::log(std::abs(p.z)) + std::log(std::abs(p.w));
  return std::exp(acc / (2.0 * static_cast<double>(nodes.size())));
}

// Critical values of the smoothing gather around each node's Gauss values in
// a cluster that shrinks only like eps^(1/3), so eps must be far below the node spacing.
constexpr double kSmoothingFraction = 1e-6;

double default_smoothing(const std::vector<LineSpec>& lines) {
  const auto nodes = arrangement_nodes(lines);
  if (nodes.empty()) return 0.0;
  const double s = node_scale(lines);
  if (nodes.size() == 1) return kSmoothingFraction * std::hypot(std::abs(nodes[0].z), std::abs(nodes[0].w)) / s;
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      m = std::min(m, std::hypot(std::abs(nodes[i].z - nodes[j].z), std::abs(nodes[i].w - nodes[j].w)));
  return kSmoothingFraction * m / s;
}

BivariateLaurent smooth_arrangement(const std::vector<LineSpec>& lines, double eps_smooth, std::uint64_t seed) {
  BivariateLaurent f = BivariateLaurent::constant(1.0);
  for (const auto& L : lines) f = f * L.polynomial();
  const int d = static_cast<int>(lines.size());
  if (d <= 1) return f;
  const double s = node_scale(lines);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.5, 1.5);
  std::bernoulli_distribution sign(0.5);
  BivariateLaurent g;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) g.add_term({i, j}, (sign(rng) ? 1.0 : -1.0) * mag(rng) * std::pow(s, -(i + j)));
  return f + eps_smooth * g;
}

}  // namespace logamoeba
