#include "logamoeba/critlocus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "logamoeba/error.hpp"
#include "logamoeba/lattice.hpp"
#include "logamoeba/loggauss.hpp"

namespace logamoeba {

namespace {

// Fraction of a step by which the default start angle is shifted off the grid
// of rational directions.
constexpr double kStartOffset = 0.3819660112501051;

bool torus_close(const TorusPoint& p, const TorusPoint& q, double rel) {
  return std::abs(p.z - q.z) <= rel * std::max(std::abs(p.z), std::abs(q.z)) &&
         std::abs(p.w - q.w) <= rel * std::max(std::abs(p.w), std::abs(q.w));
}

double min_pairwise(const std::vector<TorusPoint>& pts, const ToricMetric& metric) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) m = std::min(m, metric.distance(pts[i], pts[j]));
  return m;
}

// Nearest-neighbour continuation of `prev` into `next`. Each displacement must
// stay below a quarter of the matched point's separation from the rest of
// `next`, and the assignment must be injective.
bool match(const std::vector<TorusPoint>& prev, const std::vector<TorusPoint>& next, const ToricMetric& metric,
           std::vector<int>& assignment) {
  const std::size_t n = prev.size();
  if (next.size() != n) return false;
  std::vector<double> sep(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sep[i] = std::min(sep[i], metric.distance(next[i], next[j]));
  assignment.assign(n, -1);
  std::vector<char> taken(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    int arg = -1;
    for (std::size_t j = 0; j < n; ++j) {
      const double d = metric.distance(prev[i], next[j]);
      if (d < best) {
        best = d;
        arg = static_cast<int>(j);
      }
    }
    if (arg < 0 || taken[arg] || best > 0.25 * sep[arg]) return false;
    taken[arg] = 1;
    assignment[i] = arg;
  }
  return true;
}

}  // namespace

DiscriminantTest is_discriminantal(const BivariateLaurent& f, const Tolerances& tol) {
  const CriticalPointSet crit = critical_points(f, tol);
  DiscriminantTest out;
  out.divisor = push_forward(crit, tol.projective);
  out.margin = out.divisor.distance_to_real();
  out.discriminantal = out.margin <= tol.real;
  out.warnings = crit.warnings;
  return out;
}

std::vector<TorusPoint> fiber(const BivariateLaurent& f, const ProjPoint& d, const Tolerances& tol) {
  const long vol = invariants(newton_polygon(f)).vol;
  const BivariateLaurent g = pencil_member(f, d);
  if (g.is_zero())
    throw Error(ErrorCode::IdenticallyZeroResultant, "Gauss map is constant on V(f); every point lies in the fiber");
  SystemResult sr = solve_torus_system(f, g, tol);
  const auto has_multiple = [](const SystemResult& r) {
    return std::any_of(r.solutions.begin(), r.solutions.end(), [](const auto& s) { return s.multiplicity > 1; });
  };
  // Two simple points can share a projection; the other elimination separates them.
  if (has_multiple(sr) && sylvester_size(f, g, other(sr.eliminated)) > 0) {
    try {
      SystemResult alt = solve_torus_system(f, g, tol, other(sr.eliminated));
      if (!has_multiple(alt)) sr = std::move(alt);
    } catch (const Error&) {
    }
  }
  std::vector<TorusPoint> pts;
  for (const auto& s : sr.solutions) {
    if (s.multiplicity > 1) {
      std::ostringstream os;
      os << "fiber point of multiplicity " << s.multiplicity << " at z = " << s.z << ", w = " << s.w;
      throw Error(ErrorCode::FiberNearBranch, os.str());
    }
    pts.push_back({s.z, s.w});
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (torus_close(pts[i], pts[j], tol.collision))
        throw Error(ErrorCode::FiberNearBranch, "two fiber points closer than the collision threshold");
  if (static_cast<long>(pts.size()) < vol) {
    std::ostringstream os;
    os << pts.size() << " of " << vol << " fiber points in the torus";
    throw Error(ErrorCode::FiberEscape, os.str());
  }
  if (static_cast<long>(pts.size()) > vol) {
    std::ostringstream os;
    os << pts.size() << " fiber points exceed vol = " << vol;
    throw Error(ErrorCode::NonConvergence, os.str());
  }
  std::sort(pts.begin(), pts.end(), [](const TorusPoint& a, const TorusPoint& b) {
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
  });
  return pts;
}

ToricMetric::ToricMetric(const BivariateLaurent& f, cplx z_scale, cplx w_scale)
    : points_(newton_polygon(f).all_points),
      log_z_scale_(std::log(std::abs(z_scale))),
      log_w_scale_(std::log(std::abs(w_scale))) {}

std::vector<cplx> ToricMetric::embed(const TorusPoint& p) const {
  const double lz = std::log(std::abs(p.z)) - log_z_scale_;
  const double lw = std::log(std::abs(p.w)) - log_w_scale_;
  const double az = std::arg(p.z), aw = std::arg(p.w);
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& e : points_) top = std::max(top, e.a * lz + e.b * lw);
  std::vector<cplx> x;
  x.reserve(points_.size());
  double norm = 0.0;
  for (const auto& e : points_) {
    const cplx c = std::polar(std::exp(e.a * lz + e.b * lw - top), e.a * az + e.b * aw);
    norm += std::norm(c);
    x.push_back(c);
  }
  norm = std::sqrt(norm);
  for (cplx& c : x) c /= norm;
  return x;
}

double ToricMetric::distance(const TorusPoint& p, const TorusPoint& q) const {
  const auto x = embed(p), y = embed(q);
  cplx ip = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) ip += std::conj(x[k]) * y[k];
  return std::sqrt(std::max(0.0, 1.0 - std::norm(ip)));
}

int cycle_count(const std::vector<int>& permutation) {
  const std::size_t n = permutation.size();
  std::vector<char> seen(n, 0);
  int cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(permutation[j])) seen[j] = 1;
  }
  return cycles;
}

MonodromyResult monodromy_b0(const BivariateLaurent& f, const MonodromyOptions& opts, const Tolerances& tol) {
  if (opts.steps < 1) throw Error(ErrorCode::InvalidInput, "steps must be positive");
  if (opts.check_smooth) {
    const DiscriminantTest disc = is_discriminantal(f, tol);
    if (disc.discriminantal) {
      std::ostringstream os;
      os << "branch value within " << disc.margin << " of RP^1; S(f) is singular";
      throw Error(ErrorCode::SingularCriticalLocus, os.str());
    }
  }

  const double pi = std::numbers::pi;
  const double h = pi / opts.steps;
  const double theta0 = opts.theta0 >= 0.0 ? opts.theta0 : kStartOffset * h;
  const double end = theta0 + pi;

  const std::vector<TorusPoint> start = fiber(f, ProjPoint::real_direction(theta0), tol);
  double lz = 0.0, lw = 0.0;
  for (const auto& p : start) {
    lz += std::log(std::abs(p.z));
    lw += std::log(std::abs(p.w));
  }
  lz /= static_cast<double>(start.size());
  lw /= static_cast<double>(start.size());
  const ToricMetric metric(f, std::exp(lz), std::exp(lw));

  MonodromyResult out;
  FiberTrack& track = out.track;
  track.direction_steps.push_back(theta0);
  if (opts.keep_fibers) track.fibers.push_back(start);
  track.min_separation = min_pairwise(start, metric);

  std::vector<TorusPoint> current = start;
  std::vector<int> assignment;
  double theta = theta0;
  while (end - theta > 1e-12) {
    double step = std::min(h, end - theta);
    std::vector<TorusPoint> ordered;
    for (;;) {
      if (step < opts.min_step) {
        std::ostringstream os;
        os << "fiber paths could not be separated near theta = " << theta;
        throw Error(ErrorCode::TrackingCollision, os.str());
      }
      const double target = (end - theta - step < 1e-12) ? end : theta + step;
      bool ok = false;
      try {
        const auto next = fiber(f, ProjPoint::real_direction(target), tol);
        if (match(current, next, metric, assignment)) {
          ordered.resize(current.size());
          for (std::size_t i = 0; i < current.size(); ++i) ordered[i] = next[assignment[i]];
          ok = true;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::FiberNearBranch && e.code() != ErrorCode::FiberEscape &&
            e.code() != ErrorCode::NonConvergence)
          throw;
      }
      if (ok) {
        theta = target;
        break;
      }
      step *= 0.5;
      ++out.halvings;
    }
    current = std::move(ordered);
    track.direction_steps.push_back(theta);
    if (opts.keep_fibers) track.fibers.push_back(current);
    track.min_separation = std::min(track.min_separation, min_pairwise(current, metric));
  }
  if (track.min_separation <= tol.collision)
    throw Error(ErrorCode::TrackingCollision, "fiber paths came within the collision threshold");

  // Direction theta0 + pi is theta0 again; close the loop against the start fiber.
  if (!match(current, start, metric, assignment))
    throw Error(ErrorCode::TrackingCollision, "closing fiber does not match the starting fiber");
  track.permutation = assignment;
  out.permutation = assignment;
  out.b0 = cycle_count(assignment);
  return out;
}

}  // namespace logamoeba
