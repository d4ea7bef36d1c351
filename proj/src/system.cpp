#include "logamoeba/system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace logamoeba {

namespace {

struct Jacobian {
  WideLaurent pz, pw, qz, qw;
};

struct WidePoint {
  wcplx z, w;
};

double max_residual(const WideLaurent& p, const WideLaurent& q, const WidePoint& x) {
  return std::max(p.relative_residual(x.z, x.w), q.relative_residual(x.z, x.w));
}

bool usable(const wcplx& v) {
  const double a = std::abs(v.narrow());
  return a > 0.0 && std::isfinite(a);
}

// Damped Newton on the square system; stops when the residual stops improving.
WidePoint polish(const WideLaurent& p, const WideLaurent& q, const Jacobian& jac, WidePoint x) {
  double best = max_residual(p, q, x);
  for (int it = 0; it < 60 && best > 0.0; ++it) {
    const wcplx fp = p.eval(x.z, x.w), fq = q.eval(x.z, x.w);
    const wcplx a = jac.pz.eval(x.z, x.w), b = jac.pw.eval(x.z, x.w);
    const wcplx c = jac.qz.eval(x.z, x.w), d = jac.qw.eval(x.z, x.w);
    const wcplx det = a * d - b * c;
    if (det.zero()) break;
    const wcplx dz = (d * fp - b * fq) / det, dw = (a * fq - c * fp) / det;
    // Near-singular Jacobians (clustered solutions) overshoot.
    bool improved = false;
    wcplx t(1, 0);
    const wcplx half(wide(0.5), 0);
    for (int k = 0; k < 7; ++k, t = t * half) {
      const WidePoint next{x.z - t * dz, x.w - t * dw};
      if (!usable(next.z) || !usable(next.w)) continue;
      const double r = max_residual(p, q, next);
      if (r < best) {
        best = r;
        x = next;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return x;
}

bool in_torus(cplx v, double escape) {
  const double a = std::abs(v);
  return std::isfinite(a) && a >= 1.0 / escape && a <= escape;
}

bool close(const SystemSolution& s, const SystemSolution& t, double rel) {
  return std::abs(s.z - t.z) <= rel * std::max(std::abs(s.z), std::abs(t.z)) &&
         std::abs(s.w - t.w) <= rel * std::max(std::abs(s.w), std::abs(t.w));
}

double separation(const std::vector<Root>& rs, std::size_t i) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < rs.size(); ++j)
    if (j != i) best = std::min(best, std::abs(rs[i].value - rs[j].value));
  return best;
}

// Back-substitutes one eliminant root; returns polished solutions.
std::vector<SystemSolution> back_substitute(const WideLaurent& p, const WideLaurent& q, const Jacobian& jac,
                                            Variable eliminated, cplx kept, int cluster, double kept_radius,
                                            const Tolerances& tol) {
  // Newton converges fully on simple solutions; only clustered ones keep a loose residual.
  const double accept = cluster > 1 ? tol.backsub : tol.residual;
  // Pick the lower-degree slice that is not identically zero at `kept`.
  std::optional<std::vector<wcplx>> chosen;
  int chosen_degree = 0;
  for (const WideLaurent* f : {&p, &q}) {
    std::vector<double> maj;
    std::vector<wcplx> c = slice(*f, eliminated, wcplx(kept), &maj);
    bool all_zero = true;
    int degree = -1;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const double a = std::abs(c[k].narrow());
      if (a <= 64.0 * kWideEps * maj[k]) c[k] = wcplx();
      if (a > tol.backsub * maj[k]) all_zero = false;
      if (!c[k].zero()) degree = int(k);
    }
    if (all_zero || degree < 1) continue;
    if (!chosen || degree < chosen_degree) {
      chosen = c;
      chosen_degree = degree;
    }
  }
  std::vector<SystemSolution> out;
  if (!chosen) return out;

  RootOptions ro;
  ro.cluster = tol.cluster;
  const RootSet rs = roots(UnivariatePoly::from_wide(*chosen), ro);
  // An eliminant cluster of size k lifts to at most k points: keep the k
  // slice roots that come closest to satisfying both equations.
  std::vector<std::pair<double, std::size_t>> ranked;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const cplx v = rs.roots[i].value;
    if (!in_torus(v, tol.escape_radius)) continue;
    const WidePoint x = eliminated == Variable::w ? WidePoint{wcplx(kept), wcplx(v)} : WidePoint{wcplx(v), wcplx(kept)};
    const double res = max_residual(p, q, x);
    if (res <= std::sqrt(tol.backsub)) ranked.push_back({res, i});
  }
  std::sort(ranked.begin(), ranked.end());
  int budget = cluster;
  for (const auto& [pre, i] : ranked) {
    if (budget <= 0) break;
    const Root& r = rs.roots[i];
    budget -= r.multiplicity;
    const WidePoint x = eliminated == Variable::w ? WidePoint{wcplx(kept), wcplx(r.value)}
                                                  : WidePoint{wcplx(r.value), wcplx(kept)};
    const WidePoint y = polish(p, q, jac, x);
    const cplx yz = y.z.narrow(), yw = y.w.narrow();
    // A polish that wanders past half the gap to a neighbouring root is
    // converging to some other solution.
    const double slice_radius = std::max(0.5 * separation(rs.roots, i), 1e-3 * std::abs(r.value));
    const double move_kept = std::abs(eliminated == Variable::w ? yz - kept : yw - kept);
    const double move_slice = std::abs(eliminated == Variable::w ? yw - r.value : yz - r.value);
    if (move_kept > kept_radius || move_slice > slice_radius) continue;
    const double res = max_residual(p, q, y);
    if (res > accept) continue;
    out.push_back({yz, yw, 1, res});
  }
  return out;
}

SystemResult solve_with(const WideLaurent& p, const WideLaurent& q, Variable eliminate, const Tolerances& tol) {
  ResultantOptions opts;
  opts.trim = tol.trim;
  opts.zero = tol.zero_resultant;
  const Eliminant elim = sylvester_resultant(p, q, eliminate, opts);

  SystemResult result;
  result.eliminated = eliminate;
  result.eliminant_degree = elim.poly.degree();
  if (elim.poly.degree() < 1) return result;

  RootOptions ro;
  ro.cluster = tol.cluster;
  ro.coefficient_noise = elim.noise;
  RootSet rs = roots(elim.scaled, ro);
  for (auto& r : rs.roots) r.value *= elim.radius;
  if (!rs.converged) {
    result.warnings.push_back({ErrorCode::NonConvergence, "eliminant root finder did not fully converge"});
  }

  const Jacobian jac{p.d_dz(), p.d_dw(), q.d_dz(), q.d_dw()};
  std::vector<SystemSolution> all;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const Root& r = rs.roots[i];
    if (!in_torus(r.value, tol.escape_radius)) continue;
    const double radius = std::max(0.5 * separation(rs.roots, i), 1e-3 * std::abs(r.value));
    std::vector<SystemSolution> sols =
        back_substitute(p, q, jac, eliminate, r.value, r.multiplicity, radius, tol);
    if (sols.empty()) continue;
    // Merge coincident back-substitutions before assigning multiplicity.
    std::vector<SystemSolution> uniq;
    for (const auto& s : sols) {
      if (std::none_of(uniq.begin(), uniq.end(), [&](const auto& t) { return close(s, t, tol.merge); }))
        uniq.push_back(s);
    }
    const int k = r.multiplicity;
    if (uniq.size() == 1) {
      uniq[0].multiplicity = k;
    } else if (static_cast<int>(uniq.size()) != k) {
      std::ostringstream msg;
      msg << "eliminant root of multiplicity " << k << " lifts to " << uniq.size() << " torus points";
      result.warnings.push_back({ErrorCode::TotalMultiplicityMismatch, msg.str()});
    }
    all.insert(all.end(), uniq.begin(), uniq.end());
  }

  for (const auto& s : all) {
    auto it = std::find_if(result.solutions.begin(), result.solutions.end(),
                           [&](const auto& t) { return close(s, t, tol.merge); });
    if (it == result.solutions.end()) {
      result.solutions.push_back(s);
    } else {
      it->multiplicity += s.multiplicity;
      if (s.residual < it->residual) {
        it->z = s.z;
        it->w = s.w;
        it->residual = s.residual;
      }
    }
  }
  for (const auto& s : result.solutions) {
    if (s.residual > tol.residual) {
      std::ostringstream msg;
      msg << "solution accepted with relative residual " << s.residual;
      result.warnings.push_back({ErrorCode::NonConvergence, msg.str()});
    }
  }
  std::sort(result.solutions.begin(), result.solutions.end(), [](const auto& a, const auto& b) {
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    if (a.z.imag() != b.z.imag()) return a.z.imag() < b.z.imag();
    return a.w.real() < b.w.real();
  });
  return result;
}

}  // namespace

int SystemResult::total_multiplicity() const {
  int s = 0;
  for (const auto& x : solutions) s += x.multiplicity;
  return s;
}

SystemResult solve_torus_system(const BivariateLaurent& p, const BivariateLaurent& q, const Tolerances& tol,
                                std::optional<Variable> only) {
  return solve_torus_system(WideLaurent(p), WideLaurent(q), tol, only);
}

SystemResult solve_torus_system(const WideLaurent& p, const WideLaurent& q, const Tolerances& tol,
                                std::optional<Variable> only) {
  if (p.is_zero() || q.is_zero()) {
    throw Error(ErrorCode::IdenticallyZeroResultant, "system contains the zero polynomial");
  }
  const int size_w = sylvester_size(p, q, Variable::w);
  const int size_z = sylvester_size(p, q, Variable::z);
  std::vector<Variable> order;
  if (size_w > 0 && (size_z == 0 || size_w <= size_z)) order = {Variable::w, Variable::z};
  else order = {Variable::z, Variable::w};
  if (only) order = {*only};
  else if (sylvester_size(p, q, order[1]) == 0) order.pop_back();
  if (sylvester_size(p, q, order[0]) == 0) {
    throw Error(ErrorCode::InvalidInput, "system has no variable to eliminate");
  }

  for (std::size_t i = 0; i < order.size(); ++i) {
    try {
      return solve_with(p, q, order[i], tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::IdenticallyZeroResultant || i + 1 == order.size()) throw;
    }
  }
  throw Error(ErrorCode::IdenticallyZeroResultant, "no elimination order succeeded");
}

}  // namespace logamoeba
