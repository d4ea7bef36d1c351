#include "logamoeba/amoeba.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "logamoeba/critlocus.hpp"
#include "logamoeba/lattice.hpp"
#include "logamoeba/resultant.hpp"
#include "logamoeba/univariate.hpp"

namespace logamoeba {

namespace {

// A few Newton steps in the free coordinate.
cplx refine(const BivariateLaurent& f, const BivariateLaurent& df, cplx fixed, cplx x, bool free_is_w) {
  for (int it = 0; it < 4; ++it) {
    const cplx z = free_is_w ? fixed : x, w = free_is_w ? x : fixed;
    const cplx d = df.eval(z, w);
    if (d == 0.0) break;
    const cplx step = f.eval(z, w) / d;
    if (!std::isfinite(std::abs(step))) break;
    x -= step;
  }
  return x;
}

// slice() shifts out the lowest exponent, which leaves torus roots alone.
void sweep(const BivariateLaurent& f, const Window& win, int columns, int angles, double residual, bool free_is_w,
           const Tolerances& tol, AmoebaImage& img) {
  const Variable var = free_is_w ? Variable::w : Variable::z;
  const BivariateLaurent df = free_is_w ? f.d_dw() : f.d_dz();
  const double a0 = free_is_w ? win.x0 : win.y0, a1 = free_is_w ? win.x1 : win.y1;
  RootOptions ro;
  ro.cluster = tol.cluster;
  for (int i = 0; i < columns; ++i) {
    const double s = a0 + (a1 - a0) * (i + 0.5) / columns;
    for (int k = 0; k < angles; ++k) {
      const cplx fixed = std::polar(std::exp(s), 2.0 * std::numbers::pi * k / angles);
      const UnivariatePoly p(slice(f, var, fixed));
      if (p.degree() < 1) continue;
      for (const Root& r : roots(p, ro).roots) {
        if (r.value == 0.0) continue;
        const cplx x = refine(f, df, fixed, r.value, free_is_w);
        const cplx z = free_is_w ? fixed : x, w = free_is_w ? x : fixed;
        if (z == 0.0 || w == 0.0 || !std::isfinite(std::abs(x))) continue;
        const double res = f.relative_residual(z, w);
        const double px = std::log(std::abs(z)), py = std::log(std::abs(w));
        if (!(res <= residual) || !win.contains(px, py)) continue;
        img.samples.push_back({px, py, SampleKind::amoeba, res});
      }
    }
  }
}

bool sample_less(const AmoebaSample& a, const AmoebaSample& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  // avoid "-0.00"
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

}  // namespace

AmoebaImage render_amoeba(const BivariateLaurent& f, const Window& window, int columns, int angles, double residual,
                          const Tolerances& tol) {
  if (!window.valid()) throw Error(ErrorCode::InvalidInput, "amoeba window is empty");
  if (columns < 1 || angles < 1) throw Error(ErrorCode::InvalidInput, "amoeba grid must be at least 1 x 1");
  if (f.is_zero()) throw Error(ErrorCode::EmptyPolynomial, "amoeba of the zero polynomial");
  AmoebaImage img;
  img.window = window;
  img.columns = columns;
  img.angles = angles;
  sweep(f, window, columns, angles, residual, true, tol, img);
  sweep(f, window, columns, angles, residual, false, tol, img);
  std::sort(img.samples.begin(), img.samples.end(), sample_less);
  return img;
}

AmoebaImage render_contour(const BivariateLaurent& f, int directions, const Window& window, double residual,
                           const Tolerances& tol) {
  if (!window.valid()) throw Error(ErrorCode::InvalidInput, "contour window is empty");
  if (directions < 1) throw Error(ErrorCode::InvalidInput, "contour needs at least one direction");
  if (f.is_zero()) throw Error(ErrorCode::EmptyPolynomial, "contour of the zero polynomial");

  if (!newton_polygon(f).is_two_dimensional()) {
    // Constant Gauss map: S(f) is the whole curve.
    AmoebaImage img = render_amoeba(f, window, directions, 8, residual, tol);
    for (auto& s : img.samples) s.kind = SampleKind::contour;
    return img;
  }

  AmoebaImage img;
  img.window = window;
  img.columns = 0;
  img.angles = directions;
  for (int k = 0; k < directions; ++k) {
    const double theta = std::numbers::pi * k / directions;
    std::vector<TorusPoint> pts;
    try {
      pts = fiber(f, ProjPoint::real_direction(theta), tol);
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "direction " << theta << ": " << e.detail();
      img.skipped.push_back({e.code(), msg.str()});
      continue;
    }
    for (const auto& p : pts) {
      const double res = f.relative_residual(p.z, p.w);
      const double px = std::log(std::abs(p.z)), py = std::log(std::abs(p.w));
      if (!(res <= residual) || !window.contains(px, py)) continue;
      img.samples.push_back({px, py, SampleKind::contour, res});
    }
  }
  std::sort(img.samples.begin(), img.samples.end(), sample_less);
  return img;
}

AmoebaImage overlay(const AmoebaImage& amoeba, const AmoebaImage& contour) {
  AmoebaImage out = amoeba;
  out.samples.insert(out.samples.end(), contour.samples.begin(), contour.samples.end());
  out.skipped.insert(out.skipped.end(), contour.skipped.begin(), contour.skipped.end());
  std::sort(out.samples.begin(), out.samples.end(), sample_less);
  return out;
}

std::string to_svg(const AmoebaImage& img) {
  const Window& w = img.window;
  if (!w.valid()) throw Error(ErrorCode::InvalidInput, "cannot draw an empty window");
  const double size = 480.0, pad = 30.0;
  const double sx = size / (w.x1 - w.x0), sy = size / (w.y1 - w.y0);
  auto px = [&](double x) { return pad + (x - w.x0) * sx; };
  auto py = [&](double y) { return pad + (w.y1 - y) * sy; };

  std::ostringstream os;
  const std::string full = fmt(size + 2 * pad);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << full << "\" height=\"" << full << "\" viewBox=\"0 0 "
     << full << ' ' << full << "\">\n";
  os << "<style>.frame{fill:none;stroke:#000}.axis{stroke:#888;stroke-dasharray:4 3}"
        ".amoeba{fill:#3a6ea5}.contour{fill:#d9412b}</style>\n";
  os << "<rect class=\"frame\" x=\"" << fmt(pad) << "\" y=\"" << fmt(pad) << "\" width=\"" << fmt(size)
     << "\" height=\"" << fmt(size) << "\"/>\n";
  if (w.x0 < 0 && w.x1 > 0)
    os << "<line class=\"axis\" x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(pad) << "\" x2=\"" << fmt(px(0))
       << "\" y2=\"" << fmt(pad + size) << "\"/>\n";
  if (w.y0 < 0 && w.y1 > 0)
    os << "<line class=\"axis\" x1=\"" << fmt(pad) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(pad + size)
       << "\" y2=\"" << fmt(py(0)) << "\"/>\n";

  std::vector<AmoebaSample> pts = img.samples;
  std::sort(pts.begin(), pts.end(), sample_less);
  for (const auto& s : pts) {
    const bool contour = s.kind == SampleKind::contour;
    os << "<circle class=\"" << (contour ? "contour" : "amoeba") << "\" cx=\"" << fmt(px(s.x)) << "\" cy=\""
       << fmt(py(s.y)) << "\" r=\"" << (contour ? "1.4" : "1") << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void emit_svg(const AmoebaImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path);
  out << to_svg(img);
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path);
}

}  // namespace logamoeba
