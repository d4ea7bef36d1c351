#pragma once

#include <vector>

#include "logamoeba/error.hpp"
#include "logamoeba/laurent.hpp"
#include "logamoeba/projective.hpp"
#include "logamoeba/system.hpp"
#include "logamoeba/tolerances.hpp"
#include "logamoeba/wide_laurent.hpp"

namespace logamoeba {

/// Logarithmic Gauss map [z f_z : w f_w] at a torus point.
///
/// With strict = true the point must lie on V(f) (relative residual at most
/// tol.backsub). Throws GaussUndefined when both coordinates vanish, which on
/// V(f) means a singular point.
ProjPoint gauss(const BivariateLaurent& f, cplx z, cplx w, const Tolerances& tol = {}, bool strict = false);

/// Pencil member z f_z v - w f_w u, whose zeros on V(f) form the fiber of
/// the Gauss map over [u:v]. Coefficients cancelled to rounding level are dropped.
BivariateLaurent pencil_member(const BivariateLaurent& f, const ProjPoint& d);

/// Direction-free ramification polynomial in logarithmic coordinates:
///   h = D1 f (G D2 F - F D2 G) - D2 f (G D1 F - F D1 G),
/// with D1 = z d/dz, D2 = w d/dw, F = D1 f, G = D2 f. Equals z w times
/// det(grad f, G grad F - F grad G). Its zeros on V(f) are the critical
/// points of the Gauss map restricted to the curve (and singular points).
/// Coefficients that cancel to rounding level are removed, so h is exactly
/// zero when the Gauss map is constant.
BivariateLaurent ramification_poly(const BivariateLaurent& f);
/// The same polynomial with extended-precision coefficients. Near nodes h is
/// tiny against its own terms, so double coefficients lose the solutions.
WideLaurent ramification_poly_wide(const BivariateLaurent& f);

struct CriticalPoint {
  cplx z;
  cplx w;
  int multiplicity = 1;
  ProjPoint branch_value;
};

struct CriticalPointSet {
  std::vector<CriticalPoint> points;
  int total_multiplicity = 0;
  long expected_degree = 0;  // branching degree of the Newton polygon
  std::vector<Diagnostic> warnings;

  bool generic() const { return total_multiplicity == expected_degree; }
};

/// Ramification points of the Gauss map on V(f) in the torus, by solving
/// {f = 0, h = 0}. Throws IdenticallyZeroResultant when f and h share a
/// component (a binomial cylinder, where the Gauss map is constant).
/// A total that differs from the branching degree is reported as a
/// TotalMultiplicityMismatch warning.
CriticalPointSet critical_points(const BivariateLaurent& f, const Tolerances& tol = {});

}  // namespace logamoeba
