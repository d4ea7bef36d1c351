#pragma once

#include <string>
#include <vector>

#include "logamoeba/error.hpp"
#include "logamoeba/laurent.hpp"
#include "logamoeba/tolerances.hpp"

namespace logamoeba {

/// Rectangle in the (log|z|, log|w|) plane.
struct Window {
  double x0 = -4.0, x1 = 4.0;
  double y0 = -4.0, y1 = 4.0;

  bool contains(double x, double y) const { return x >= x0 && x <= x1 && y >= y0 && y <= y1; }
  bool valid() const { return x1 > x0 && y1 > y0; }
};

enum class SampleKind { amoeba, contour };

struct AmoebaSample {
  double x = 0.0;
  double y = 0.0;
  SampleKind kind = SampleKind::amoeba;
  double residual = 0.0;  // relative residual of f at the torus point
};

struct AmoebaImage {
  Window window;
  std::vector<AmoebaSample> samples;
  int columns = 0;  // x (and y) grid lines
  int angles = 0;   // arguments per grid line, or directions for a contour
  std::vector<Diagnostic> skipped;  // directions or columns that produced nothing
};

/// Samples A(V(f)) fiberwise: for each column x and argument theta, the roots
/// w of f(e^(x + i theta), w) inside the window, then the same with z and w
/// exchanged. Only points with relative residual at most `residual` are kept.
AmoebaImage render_amoeba(const BivariateLaurent& f, const Window& window, int columns, int angles,
                          double residual = 1e-8, const Tolerances& tol = {});

/// Samples the contour A(S(f)) from the Gauss map fibers over `directions`
/// real directions in [0, pi). Directions whose fiber fails are recorded in
/// `skipped`. When the Gauss map is constant (binomial curves) the whole
/// curve is critical and the contour is sampled like the amoeba.
AmoebaImage render_contour(const BivariateLaurent& f, int directions, const Window& window, double residual = 1e-8,
                           const Tolerances& tol = {});

/// Amoeba samples followed by contour samples.
AmoebaImage overlay(const AmoebaImage& amoeba, const AmoebaImage& contour);

/// Deterministic SVG: fixed ordering, classes "amoeba" and "contour".
std::string to_svg(const AmoebaImage& img);
/// Throws IoError when the file cannot be written.
void emit_svg(const AmoebaImage& img, const std::string& path);

}  // namespace logamoeba
