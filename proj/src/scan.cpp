#include "logamoeba/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "logamoeba/error.hpp"

namespace logamoeba {

cplx ParameterGrid::at(int i_re, int i_im) const {
  const double re = re_count > 1 ? re0 + (re1 - re0) * i_re / (re_count - 1) : re0;
  const double im = im_count > 1 ? im0 + (im1 - im0) * i_im / (im_count - 1) : im0;
  return {re, im};
}

ScanResult scan_family(const FamilyTemplate& family, const ParameterGrid& grid, const ScanOptions& opts,
                       const Tolerances& tol) {
  if (grid.re_count < 1 || grid.im_count < 1) throw Error(ErrorCode::InvalidInput, "scan grid must be nonempty");
  ScanResult out;
  out.grid = grid;
  out.cells.reserve(grid.size());
  for (int j = 0; j < grid.im_count; ++j) {
    for (int i = 0; i < grid.re_count; ++i) {
      ScanCell c;
      c.i_re = i;
      c.i_im = j;
      c.alpha = grid.at(i, j);
      try {
        const DiscriminantTest t = is_discriminantal(family.at(c.alpha), tol);
        c.ok = true;
        c.discriminantal = t.discriminantal;
        c.margin = t.margin;
        c.degree = t.divisor.degree();
      } catch (const Error& e) {
        c.error = to_string(e.code());
      }
      if (opts.compute_b0 && c.ok && !c.discriminantal) {
        try {
          c.b0 = monodromy_b0(family.at(c.alpha), opts.monodromy, tol).b0;
          if (!out.min_b0 || *c.b0 < *out.min_b0) out.min_b0 = c.b0;
        } catch (const Error& e) {
          c.b0_error = to_string(e.code());
        }
      }
      out.cells.push_back(std::move(c));
    }
  }
  return out;
}

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

// Blue (far from the discriminant) to white (on it).
std::string shade(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(255 * (1 - t) + 40 * t));
  const int g = static_cast<int>(std::lround(255 * (1 - t) + 90 * t));
  const int b = static_cast<int>(std::lround(255 * (1 - t) + 180 * t));
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

std::string scan_svg(const ScanResult& scan) {
  const ParameterGrid& g = scan.grid;
  const double cw = std::max(4.0, 480.0 / g.re_count);
  const double ch = g.im_count == 1 ? 60.0 : std::max(4.0, 480.0 / g.im_count);
  const double pad = 40.0;
  const double width = 2 * pad + cw * g.re_count, height = 2 * pad + ch * g.im_count;

  // Margins live in [0, 1/2]; the colour scale is logarithmic down to 1e-8.
  auto level = [](double m) { return m <= 0 ? 0.0 : std::clamp((std::log10(m) + 8.0) / 8.0, 0.0, 1.0); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  os << "<style>.cell{stroke:none}.disc{fill:none;stroke:#c0392b;stroke-width:1.5}.err{fill:#999}"
        ".label{font:11px sans-serif}</style>\n";
  for (const ScanCell& c : scan.cells) {
    const double x = pad + cw * c.i_re;
    // imaginary part grows upwards
    const double y = pad + ch * (g.im_count - 1 - c.i_im);
    os << "<rect class=\"" << (c.ok ? "cell" : "err") << "\" x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\""
       << fmt(cw) << "\" height=\"" << fmt(ch) << '"';
    if (c.ok) os << " fill=\"" << shade(level(c.margin)) << '"';
    os << "/>\n";
    if (c.ok && c.discriminantal)
      os << "<rect class=\"disc\" x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(cw)
         << "\" height=\"" << fmt(ch) << "\"/>\n";
  }
  os << "<text class=\"label\" x=\"" << fmt(pad) << "\" y=\"" << fmt(height - 12) << "\">re " << fmt(g.re0)
     << " .. " << fmt(g.re1) << "</text>\n";
  os << "<text class=\"label\" x=\"" << fmt(pad) << "\" y=\"" << fmt(24) << "\">im " << fmt(g.im0) << " .. "
     << fmt(g.im1) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace logamoeba
