#pragma once

#include <complex>
#include <iosfwd>

namespace logamoeba {

using cplx = std::complex<double>;

/// Point [u:v] of CP^1, stored with max(|u|,|v|) = 1.
class ProjPoint {
 public:
  ProjPoint() : u_(1.0), v_(0.0) {}
  /// Throws InvalidInput for (0,0).
  ProjPoint(cplx u, cplx v);

  static ProjPoint from_affine(cplx t) { return {t, 1.0}; }
  static ProjPoint real_direction(double theta);

  cplx u() const { return u_; }
  cplx v() const { return v_; }
  /// u / v; infinite for [1:0].
  cplx affine() const;

  /// |Im(u conj v)| / (|u|^2 + |v|^2); zero exactly on RP^1 (including [1:0]).
  double distance_to_real() const;
  bool is_real(double tol) const { return distance_to_real() <= tol; }
  /// +1 on the upper hemisphere Im(u/v) > 0, -1 on the lower, 0 within tol of RP^1.
  int hemisphere(double tol) const;

  ProjPoint conj() const { return {std::conj(u_), std::conj(v_)}; }

 private:
  cplx u_;
  cplx v_;
};

/// |u1 v2 - u2 v1| / (|p| |q|), in [0, 1].
double chordal_distance(const ProjPoint& p, const ProjPoint& q);

inline bool projectively_equal(const ProjPoint& p, const ProjPoint& q, double tol) {
  return chordal_distance(p, q) <= tol;
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);

}  // namespace logamoeba
