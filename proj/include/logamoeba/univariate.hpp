#pragma once

#include <complex>
#include <span>
#include <vector>

#include "logamoeba/wide.hpp"

namespace logamoeba {

using cplx = std::complex<double>;

/// Dense univariate polynomial; coefficient index equals degree.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<cplx> coefficients);

  static UnivariatePoly from_roots(std::span<const cplx> roots, cplx leading = 1.0);
  /// Keeps extended-precision coefficients as double-double pairs; the root
  /// finder then evaluates in extended precision.
  static UnivariatePoly from_wide(const std::vector<wcplx>& coefficients);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<cplx>& coefficients() const { return c_; }
  /// Low-order parts of the coefficients; empty unless built by from_wide.
  const std::vector<cplx>& low_parts() const { return lo_; }
  cplx operator[](int k) const { return (k >= 0 && k <= degree()) ? c_[k] : cplx(0.0); }
  cplx leading() const { return c_.empty() ? cplx(0.0) : c_.back(); }

  cplx operator()(cplx x) const;
  /// sum |c_k| |x|^k
  double magnitude(double abs_x) const;
  double norm1() const;
  double norm_inf() const;

  UnivariatePoly derivative() const;
  /// Drops leading coefficients with |c| <= rel * max|c| and zeroes trailing ones
  /// under the same threshold.
  UnivariatePoly trimmed(double rel) const;
  /// Number of exactly-zero low-order coefficients (roots at the origin).
  int trailing_zeros() const;

  friend UnivariatePoly operator*(const UnivariatePoly& p, const UnivariatePoly& q);

 private:
  void normalize();
  std::vector<cplx> c_;
  std::vector<cplx> lo_;
};

struct Root {
  cplx value;
  int multiplicity = 1;
  double cluster_radius = 0.0;
};

struct RootOptions {
  // Roots closer than cluster * |root| are merged.
  double cluster = 1e-6;
  // Verification bound |p(r)| <= residual * ||p||_1 * max(1,|r|)^deg.
  double residual = 1e-9;
  int max_iterations = 500;
  // Relative perturbation already present in the coefficients (for example
  // interpolation noise); widens the inclusion disks used for clustering.
  double coefficient_noise = 0.0;
};

struct RootSet {
  std::vector<Root> roots;
  bool converged = true;
  int iterations = 0;
  double max_residual = 0.0;

  int total_multiplicity() const;
  std::vector<cplx> values() const;
};

/// All complex roots by Aberth-Ehrlich simultaneous iteration. Numerically
/// coincident roots are merged by overlapping inclusion disks and reported
/// with their count as multiplicity. A non-converged run still returns the
/// best iterate with converged = false.
RootSet roots(const UnivariatePoly& p, const RootOptions& opts = {});

}  // namespace logamoeba
