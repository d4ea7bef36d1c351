#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "logamoeba/error.hpp"
#include "logamoeba/lattice.hpp"

using namespace logamoeba;
using testing::poly;

namespace {

// Shoelace and brute-force point counts, independent of the library's hull.
struct Counted {
  long twice_area;
  long interior;
  long boundary;
};

long cross(Exponent o, Exponent a, Exponent b) {
  return long(a.a - o.a) * (b.b - o.b) - long(a.b - o.b) * (b.a - o.a);
}

Counted brute_force(const std::vector<Exponent>& ccw) {
  Counted c{0, 0, 0};
  const std::size_t n = ccw.size();
  for (std::size_t i = 0; i < n; ++i) c.twice_area += cross({0, 0}, ccw[i], ccw[(i + 1) % n]);
  int lo_a = 1 << 20, hi_a = -(1 << 20), lo_b = lo_a, hi_b = hi_a;
  for (auto v : ccw) {
    lo_a = std::min(lo_a, v.a), hi_a = std::max(hi_a, v.a);
    lo_b = std::min(lo_b, v.b), hi_b = std::max(hi_b, v.b);
  }
  for (int a = lo_a; a <= hi_a; ++a)
    for (int b = lo_b; b <= hi_b; ++b) {
      bool inside = true, on_edge = false;
      for (std::size_t i = 0; i < n; ++i) {
        const long s = cross(ccw[i], ccw[(i + 1) % n], {a, b});
        if (s < 0) inside = false;
        if (s == 0) on_edge = true;
      }
      if (!inside) continue;
      if (on_edge) ++c.boundary;
      else ++c.interior;
    }
  return c;
}

BivariateLaurent cube_of_line() {
  const BivariateLaurent line = poly({{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}});
  return line * line * line;
}

}  // namespace

TEST_CASE("unit square") {
  const LatticePolygon P = newton_polygon(poly({{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}, {{1, 1}, 1.0}}));
  CHECK(P.vertices == std::vector<Exponent>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const PolygonInvariants inv = invariants(P);
  CHECK(inv.vol == 2);
  CHECK(inv.interior == 0);
  CHECK(inv.boundary == 4);
  CHECK(branching_degree(P) == 2);
}

TEST_CASE("quadrilateral with z^2") {
  const LatticePolygon P =
      newton_polygon(poly({{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}, {{1, 1}, 1.0}, {{2, 0}, 1.0}}));
  CHECK(P.vertices == std::vector<Exponent>{{0, 0}, {2, 0}, {1, 1}, {0, 1}});
  CHECK(P.all_points.size() == 5);
  const PolygonInvariants inv = invariants(P);
  CHECK(inv.vol == 3);
  CHECK(inv.interior == 0);
  CHECK(inv.boundary == 5);
  CHECK(branching_degree(P) == 4);
}

TEST_CASE("cube of a line fills the 3-simplex") {
  const LatticePolygon P = newton_polygon(cube_of_line());
  CHECK(P.all_points.size() == 10);
  const PolygonInvariants inv = invariants(P);
  const Counted c = brute_force(P.vertices);
  CHECK(inv.vol == 9);
  CHECK(inv.interior == 1);
  CHECK(inv.boundary == 9);
  CHECK(c.twice_area == inv.vol);
  CHECK(c.interior == inv.interior);
  CHECK(c.boundary == inv.boundary);
  CHECK(branching_degree(P) == 18);
}

TEST_CASE("unit triangle has no ramification") {
  CHECK(branching_degree(newton_polygon(poly({{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}}))) == 0);
}

TEST_CASE("degenerate and empty inputs") {
  const LatticePolygon seg = newton_polygon(poly({{{1, 1}, 1.0}, {{0, 0}, -5.0}}));
  CHECK_FALSE(seg.is_two_dimensional());
  CHECK_THROWS_AS(invariants(seg), Error);
  try {
    branching_degree(seg);
    FAIL("expected DegeneratePolygon");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegeneratePolygon);
  }
  try {
    newton_polygon(BivariateLaurent{});
    FAIL("expected EmptyPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyPolynomial);
  }
}

TEST_CASE("random hulls agree with brute force and Pick") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coord(-6, 6), count(3, 12);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Exponent> pts(count(rng));
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    const LatticePolygon P = convex_hull(pts);
    if (!P.is_two_dimensional()) continue;
    ++checked;
    const PolygonInvariants inv = invariants(P);
    const Counted c = brute_force(P.vertices);
    CHECK(c.twice_area == inv.vol);
    CHECK(c.interior == inv.interior);
    CHECK(c.boundary == inv.boundary);
    CHECK(inv.vol == 2 * inv.interior + inv.boundary - 2);
    CHECK(long(P.all_points.size()) == inv.interior + inv.boundary);
    CHECK(branching_degree(P) >= 0);
    CHECK((branching_degree(P) == 0) == (inv.vol == 1));
    // every input point is inside
    const std::set<Exponent> all(P.all_points.begin(), P.all_points.end());
    for (const auto& p : pts) CHECK(all.count(p) == 1);
    // convex position, counterclockwise, no collinear triples
    const std::size_t n = P.vertices.size();
    for (std::size_t i = 0; i < n; ++i) CHECK(cross(P.vertices[i], P.vertices[(i + 1) % n], P.vertices[(i + 2) % n]) > 0);
  }
  CHECK(checked > 200);
}

TEST_CASE("monomial shift translates the hull") {
  const BivariateLaurent f = poly({{{0, 0}, 1.0}, {{2, 0}, 2.0}, {{1, 1}, 3.0}, {{0, 3}, 1.0}});
  const LatticePolygon P = newton_polygon(f), Q = newton_polygon(f.shifted({-3, 2}));
  REQUIRE(P.vertices.size() == Q.vertices.size());
  for (std::size_t i = 0; i < P.vertices.size(); ++i) CHECK(Q.vertices[i] == P.vertices[i] + Exponent{-3, 2});
  CHECK(invariants(P).vol == invariants(Q).vol);
}

TEST_CASE("edge directions and dilation") {
  const LatticePolygon square = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(primitive_edge_directions(square) == std::vector<Exponent>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  const LatticePolygon tri = dilate(testing::simplex(1), 3);
  CHECK(invariants(tri).vol == 9);
  CHECK(primitive_edge_directions(tri) == std::vector<Exponent>{{1, 0}, {-1, 1}, {0, -1}});
}
