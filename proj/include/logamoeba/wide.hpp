#pragma once

#include <complex>
#include <limits>

namespace logamoeba {

#ifdef __SIZEOF_FLOAT128__
using wide = __float128;
inline constexpr double kWideEps = 1.93e-34;
#else
using wide = long double;
inline constexpr double kWideEps = static_cast<double>(std::numeric_limits<long double>::epsilon());
#endif

/// Minimal complex arithmetic in extended precision (std::complex is not
/// specified for non-standard floating types).
struct wcplx {
  wide re = 0, im = 0;

  wcplx() = default;
  wcplx(std::complex<double> c) : re(c.real()), im(c.imag()) {}
  wcplx(wide r, wide i) : re(r), im(i) {}

  friend wcplx operator+(wcplx a, wcplx b) { return {a.re + b.re, a.im + b.im}; }
  friend wcplx operator-(wcplx a, wcplx b) { return {a.re - b.re, a.im - b.im}; }
  friend wcplx operator*(wcplx a, wcplx b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend wcplx operator/(wcplx a, wcplx b) {
    const wide n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  wcplx operator-() const { return {-re, -im}; }
  friend bool operator==(wcplx a, wcplx b) { return a.re == b.re && a.im == b.im; }

  wide l1() const { return (re < 0 ? -re : re) + (im < 0 ? -im : im); }
  bool zero() const { return re == 0 && im == 0; }
  std::complex<double> narrow() const { return {double(re), double(im)}; }
  /// Rounding remainder: *this - narrow().
  std::complex<double> remainder() const {
    const std::complex<double> hi = narrow();
    return {double(re - wide(hi.real())), double(im - wide(hi.imag()))};
  }
};

/// exp(2 pi i num / den) in extended precision.
wcplx wide_unit_root(long num, long den);

}  // namespace logamoeba
