#pragma once

#include <vector>

#include "logamoeba/exponent.hpp"
#include "logamoeba/laurent.hpp"

namespace logamoeba {

/// Convex lattice polygon: the hull of a finite subset of Z^2.
struct LatticePolygon {
  std::vector<Exponent> vertices;    // counterclockwise, no collinear triples
  std::vector<Exponent> all_points;  // every lattice point of the hull, sorted

  /// False when the hull is a point or a segment.
  bool is_two_dimensional() const { return vertices.size() >= 3; }
};

struct PolygonInvariants {
  long vol = 0;       // twice the Euclidean area
  long interior = 0;  // g: interior lattice points
  long boundary = 0;  // b: boundary lattice points
};

/// Monotone chain hull with exact integer arithmetic.
LatticePolygon convex_hull(std::vector<Exponent> points);

/// Hull of the support of f. Throws EmptyPolynomial for f = 0; lower
/// dimensional hulls are returned with is_two_dimensional() == false.
LatticePolygon newton_polygon(const BivariateLaurent& f);

/// Throws DegeneratePolygon when P is not two-dimensional.
PolygonInvariants invariants(const LatticePolygon& P);

/// Degree of the generic branching divisor of the logarithmic Gauss map,
/// 2 vol + 2 g - 2.
long branching_degree(const LatticePolygon& P);

/// Primitive direction vectors of the edges, counterclockwise.
std::vector<Exponent> primitive_edge_directions(const LatticePolygon& P);

/// Dilation k * P (vertices scaled, lattice points re-enumerated).
LatticePolygon dilate(const LatticePolygon& P, int k);

}  // namespace logamoeba
