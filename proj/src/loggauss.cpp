#include "logamoeba/loggauss.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "logamoeba/lattice.hpp"

namespace logamoeba {

namespace {

// A polynomial together with a coefficientwise bound on the absolute values
// that entered each coefficient; lets exact cancellation be recognised.
struct Tracked {
  WideLaurent value;
  BivariateLaurent bound;

  Tracked log_dz() const {
    Tracked t{value.log_dz(), {}};
    for (const auto& [e, c] : bound.terms()) t.bound.add_term(e, c * double(std::abs(e.a)));
    return t;
  }
  Tracked log_dw() const {
    Tracked t{value.log_dw(), {}};
    for (const auto& [e, c] : bound.terms()) t.bound.add_term(e, c * double(std::abs(e.b)));
    return t;
  }
  friend Tracked operator*(const Tracked& x, const Tracked& y) { return {x.value * y.value, x.bound * y.bound}; }
  friend Tracked operator-(const Tracked& x, const Tracked& y) { return {x.value - y.value, x.bound + y.bound}; }
};

Tracked track(const BivariateLaurent& f) {
  Tracked t{WideLaurent(f), {}};
  for (const auto& [e, c] : f.terms()) t.bound.add_term(e, std::abs(c));
  return t;
}

}  // namespace

ProjPoint gauss(const BivariateLaurent& f, cplx z, cplx w, const Tolerances& tol, bool strict) {
  if (z == 0.0 || w == 0.0) throw Error(ErrorCode::EvalAtTorusBoundary, "gauss: point not in the torus");
  if (strict && f.relative_residual(z, w) > tol.backsub) {
    throw Error(ErrorCode::InvalidInput, "gauss: point is not on the curve");
  }
  const BivariateLaurent F = f.log_dz();
  const BivariateLaurent G = f.log_dw();
  const cplx u = F.eval(z, w);
  const cplx v = G.eval(z, w);
  const double scale = f.magnitude(z, w);
  if (std::abs(u) <= tol.residual * scale && std::abs(v) <= tol.residual * scale) {
    throw Error(ErrorCode::GaussUndefined, "both logarithmic derivatives vanish (singular point of V(f))");
  }
  return {u, v};
}

BivariateLaurent pencil_member(const BivariateLaurent& f, const ProjPoint& d) {
  BivariateLaurent out;
  const double scale = std::max(std::abs(d.u()), std::abs(d.v()));
  for (const auto& [e, c] : f.terms()) {
    const cplx factor = double(e.a) * d.v() - double(e.b) * d.u();
    const double bound = (std::abs(e.a) + std::abs(e.b)) * scale;
    if (std::abs(factor) <= 8.0 * std::numeric_limits<double>::epsilon() * bound) continue;
    out.add_term(e, c * factor);
  }
  return out;
}

WideLaurent ramification_poly_wide(const BivariateLaurent& f) {
  const Tracked tf = track(f);
  const Tracked F = tf.log_dz();
  const Tracked G = tf.log_dw();
  const Tracked h = F * (G * F.log_dw() - F * G.log_dw()) - G * (G * F.log_dz() - F * G.log_dz());
  WideLaurent out;
  for (const auto& [e, c] : h.value.terms()) {
    if (std::abs(c.narrow()) > 1024.0 * kWideEps * h.bound.coeff(e).real()) out.add_term(e, c);
  }
  return out;
}

BivariateLaurent ramification_poly(const BivariateLaurent& f) { return ramification_poly_wide(f).narrow(); }

CriticalPointSet critical_points(const BivariateLaurent& f, const Tolerances& tol) {
  const LatticePolygon P = newton_polygon(f);
  const WideLaurent h = ramification_poly_wide(f);
  if (h.is_zero()) {
    throw Error(ErrorCode::IdenticallyZeroResultant, "the Gauss map is constant on V(f) (binomial curve)");
  }

  CriticalPointSet out;
  out.expected_degree = P.is_two_dimensional() ? branching_degree(P) : 0;

  const SystemResult sr = solve_torus_system(WideLaurent(f), h, tol);
  out.warnings = sr.warnings;
  for (const auto& s : sr.solutions) {
    out.points.push_back({s.z, s.w, s.multiplicity, gauss(f, s.z, s.w, tol)});
    out.total_multiplicity += s.multiplicity;
  }
  if (out.total_multiplicity != out.expected_degree) {
    std::ostringstream msg;
    msg << "total critical multiplicity " << out.total_multiplicity << " differs from branching degree "
        << out.expected_degree << " (non-generic or near-singular curve)";
    out.warnings.push_back({ErrorCode::TotalMultiplicityMismatch, msg.str()});
  }
  return out;
}

}  // namespace logamoeba
