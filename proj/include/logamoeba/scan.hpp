#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logamoeba/critlocus.hpp"
#include "logamoeba/laurent.hpp"
#include "logamoeba/tolerances.hpp"

namespace logamoeba {

/// One-parameter family f(alpha) = base + alpha * slope.
struct FamilyTemplate {
  BivariateLaurent base;
  BivariateLaurent slope;

  BivariateLaurent at(cplx alpha) const { return base + alpha * slope; }
};

/// Rectangular grid of complex parameters. A count of 1 pins that axis to its
/// lower end, so a real segment is {re0, re1, n, im, im, 1}.
struct ParameterGrid {
  double re0 = -2.0, re1 = 2.0;
  int re_count = 41;
  double im0 = 0.0, im1 = 0.0;
  int im_count = 1;

  int size() const { return re_count * im_count; }
  cplx at(int i_re, int i_im) const;
};

struct ScanCell {
  int i_re = 0;
  int i_im = 0;
  cplx alpha;
  bool ok = false;  // false when the cell raised an error
  bool discriminantal = false;
  double margin = 0.0;
  int degree = 0;              // degree of LL at this cell
  std::optional<int> b0;       // only when requested and S(f) is smooth
  std::string error;           // error code name when !ok
  std::string b0_error;        // why b0 is missing, if it was requested
};

struct ScanOptions {
  bool compute_b0 = false;
  MonodromyOptions monodromy;
};

struct ScanResult {
  ParameterGrid grid;
  std::vector<ScanCell> cells;  // im-major: cells[i_im * re_count + i_re]
  std::optional<int> min_b0;    // smallest b0 seen (exploratory, asserts nothing)

  const ScanCell& cell(int i_re, int i_im) const { return cells[i_im * grid.re_count + i_re]; }
};

/// Evaluates the discriminant test (and optionally b0) on every grid cell.
/// Errors are recorded per cell; the scan itself never throws on them.
ScanResult scan_family(const FamilyTemplate& family, const ParameterGrid& grid, const ScanOptions& opts = {},
                       const Tolerances& tol = {});

/// Heatmap of log10(margin) with discriminantal cells outlined. Deterministic.
std::string scan_svg(const ScanResult& scan);

}  // namespace logamoeba
