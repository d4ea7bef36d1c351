#include "logamoeba/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "logamoeba/error.hpp"

namespace logamoeba {

namespace {

long cross(Exponent o, Exponent a, Exponent b) {
  return long(a.a - o.a) * (b.b - o.b) - long(a.b - o.b) * (b.a - o.a);
}

std::vector<Exponent> enumerate_points(const std::vector<Exponent>& vertices) {
  if (vertices.empty()) return {};
  int xmin = vertices[0].a, xmax = xmin, ymin = vertices[0].b, ymax = ymin;
  for (const auto& v : vertices) {
    xmin = std::min(xmin, v.a);
    xmax = std::max(xmax, v.a);
    ymin = std::min(ymin, v.b);
    ymax = std::max(ymax, v.b);
  }
  std::vector<Exponent> out;
  const std::size_t n = vertices.size();
  for (int x = xmin; x <= xmax; ++x) {
    for (int y = ymin; y <= ymax; ++y) {
      const Exponent p{x, y};
      bool inside = true;
      if (n == 1) {
        inside = (p == vertices[0]);
      } else if (n == 2) {
        inside = cross(vertices[0], vertices[1], p) == 0 && std::min(vertices[0].a, vertices[1].a) <= x &&
                 x <= std::max(vertices[0].a, vertices[1].a) && std::min(vertices[0].b, vertices[1].b) <= y &&
                 y <= std::max(vertices[0].b, vertices[1].b);
      } else {
        for (std::size_t i = 0; i < n && inside; ++i) inside = cross(vertices[i], vertices[(i + 1) % n], p) >= 0;
      }
      if (inside) out.push_back(p);
    }
  }
  return out;
}

}  // namespace

LatticePolygon convex_hull(std::vector<Exponent> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  LatticePolygon P;
  if (pts.size() <= 1) {
    P.vertices = pts;
    P.all_points = pts;
    return P;
  }
  std::vector<Exponent> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  P.vertices = hull;
  P.all_points = enumerate_points(P.vertices);
  return P;
}

LatticePolygon newton_polygon(const BivariateLaurent& f) {
  if (f.is_zero()) throw Error(ErrorCode::EmptyPolynomial, "newton_polygon of the zero polynomial");
  return convex_hull(f.support());
}

PolygonInvariants invariants(const LatticePolygon& P) {
  if (!P.is_two_dimensional()) throw Error(ErrorCode::DegeneratePolygon, "polygon has dimension < 2");
  const auto& v = P.vertices;
  const std::size_t n = v.size();
  PolygonInvariants inv;
  for (std::size_t i = 0; i < n; ++i) {
    const Exponent a = v[i], b = v[(i + 1) % n];
    inv.vol += long(a.a) * b.b - long(b.a) * a.b;
    inv.boundary += std::gcd(std::abs(b.a - a.a), std::abs(b.b - a.b));
  }
  inv.interior = static_cast<long>(P.all_points.size()) - inv.boundary;
  return inv;
}

long branching_degree(const LatticePolygon& P) {
  const PolygonInvariants inv = invariants(P);
  return 2 * inv.vol + 2 * inv.interior - 2;
}

std::vector<Exponent> primitive_edge_directions(const LatticePolygon& P) {
  std::vector<Exponent> out;
  const auto& v = P.vertices;
  if (v.size() < 2) return out;
  const std::size_t n = v.size() == 2 ? 1 : v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Exponent d = v[(i + 1) % v.size()] - v[i];
    const int g = std::gcd(std::abs(d.a), std::abs(d.b));
    out.push_back({d.a / g, d.b / g});
  }
  return out;
}

LatticePolygon dilate(const LatticePolygon& P, int k) {
  std::vector<Exponent> scaled;
  for (const auto& v : P.vertices) scaled.push_back({k * v.a, k * v.b});
  return convex_hull(std::move(scaled));
}

}  // namespace logamoeba
