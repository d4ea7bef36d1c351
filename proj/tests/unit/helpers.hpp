#pragma once

#include <complex>
#include <random>
#include <vector>

#include "logamoeba/laurent.hpp"
#include "logamoeba/lattice.hpp"
#include "logamoeba/projective.hpp"

namespace testing {

using logamoeba::BivariateLaurent;
using logamoeba::cplx;
using logamoeba::Exponent;

inline BivariateLaurent poly(std::initializer_list<std::pair<Exponent, cplx>> terms) { return BivariateLaurent(terms); }

// 1 + z + w + alpha zw
inline BivariateLaurent quadric(cplx alpha) { return poly({{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}, {{1, 1}, alpha}}); }

// 1 + z + w + alpha zw - alpha z^2
inline BivariateLaurent quartic_family(cplx alpha) {
  return poly({{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}, {{1, 1}, alpha}, {{2, 0}, -alpha}});
}

// Random complex coefficients on every lattice point of the polygon.
inline BivariateLaurent random_on(const logamoeba::LatticePolygon& P, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  BivariateLaurent f;
  for (const Exponent& e : P.all_points) f.add_term(e, {g(rng), g(rng)});
  return f;
}

inline logamoeba::LatticePolygon simplex(int d) {
  return logamoeba::convex_hull({{0, 0}, {d, 0}, {0, d}});
}

// Chordal distance of a+0i style values to a projective point u/v.
inline double affine_gap(const logamoeba::ProjPoint& p, cplx t) {
  return logamoeba::chordal_distance(p, logamoeba::ProjPoint::from_affine(t));
}

}  // namespace testing
