#include "logamoeba/projective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "logamoeba/error.hpp"

namespace logamoeba {

ProjPoint::ProjPoint(cplx u, cplx v) {
  const double m = std::max(std::abs(u), std::abs(v));
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw Error(ErrorCode::InvalidInput, "projective point needs a finite nonzero coordinate");
  }
  u_ = u / m;
  v_ = v / m;
}

ProjPoint ProjPoint::real_direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

cplx ProjPoint::affine() const {
  if (v_ == 0.0) return {std::numeric_limits<double>::infinity(), 0.0};
  return u_ / v_;
}

double ProjPoint::distance_to_real() const {
  return std::abs((u_ * std::conj(v_)).imag()) / (std::norm(u_) + std::norm(v_));
}

int ProjPoint::hemisphere(double tol) const {
  if (is_real(tol)) return 0;
  return (u_ * std::conj(v_)).imag() > 0.0 ? 1 : -1;
}

double chordal_distance(const ProjPoint& p, const ProjPoint& q) {
  const double np = std::sqrt(std::norm(p.u()) + std::norm(p.v()));
  const double nq = std::sqrt(std::norm(q.u()) + std::norm(q.v()));
  return std::abs(p.u() * q.v() - q.u() * p.v()) / (np * nq);
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) {
  return os << "[" << p.u() << ":" << p.v() << "]";
}

}  // namespace logamoeba
