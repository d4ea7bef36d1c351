#pragma once

#include <map>
#include <string>
#include <string_view>

namespace logamoeba {

/// Every numerical threshold used by the solvers, settable by name.
struct Tolerances {
  double cluster = 1e-6;          // relative radius for merging polynomial roots
  double residual = 1e-9;         // relative residual of an accepted solution
  double backsub = 1e-5;          // relative residual of a back-substitution candidate
  double merge = 1e-5;            // relative distance identifying two torus solutions
  double real = 1e-9;             // distance to RP^1 counted as real
  double projective = 1e-6;       // chordal distance identifying two points of CP^1
  double zero_resultant = 1e-11;  // |Res| / Hadamard bound treated as identically zero
  double trim = 1e-11;            // relative size of negligible eliminant coefficients
  double collision = 1e-7;        // minimum separation of fiber points
  double escape_radius = 1e8;     // fiber points must satisfy 1/R <= |z|,|w| <= R

  /// Throws InvalidInput for unknown names or non-positive values.
  void set(std::string_view name, double value);
  std::map<std::string, double> named() const;
};

}  // namespace logamoeba
