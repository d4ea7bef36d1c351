#pragma once

#include <vector>

#include "logamoeba/laurent.hpp"
#include "logamoeba/loggauss.hpp"
#include "logamoeba/projective.hpp"
#include "logamoeba/tolerances.hpp"

namespace logamoeba {

struct DivisorEntry {
  ProjPoint point;
  int multiplicity = 1;
};

/// Effective divisor on CP^1.
class DivisorCP1 {
 public:
  DivisorCP1() = default;

  /// Adds mult * p, merging with an existing entry within `tol` (chordal).
  void add(const ProjPoint& p, int mult, double tol);
  void add(const DivisorCP1& other, double tol);

  const std::vector<DivisorEntry>& entries() const { return entries_; }
  int degree() const;
  bool empty() const { return entries_.empty(); }

  /// Conjugate divisor sum mult [conj u : conj v].
  DivisorCP1 conj(double tol) const;
  /// Minimum distance to RP^1 over the support (infinity when empty).
  double distance_to_real() const;

 private:
  std::vector<DivisorEntry> entries_;
};

/// sum_k c_k u^k v^(m-k), defined up to scale.
struct BinaryForm {
  std::vector<cplx> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  /// Scaled so the largest-modulus coefficient equals 1.
  BinaryForm normalized() const;
  /// Roots as a divisor (dehomogenised at v = 1; a degree drop is [1:0]).
  DivisorCP1 divisor(const Tolerances& tol = {}) const;
};

/// prod (v_i u - u_i v)^(m_i), normalized.
BinaryForm binary_form(const DivisorCP1& D);

/// Relative coefficient error min_s ||a - s b|| / ||a|| over complex scales s.
double projective_coefficient_distance(const BinaryForm& a, const BinaryForm& b);

/// Push-forward of the critical points by their branch values.
DivisorCP1 push_forward(const CriticalPointSet& crit, double tol);

/// LL(f): the branching divisor of the logarithmic Gauss map.
DivisorCP1 ll_divisor(const BivariateLaurent& f, const Tolerances& tol = {});

/// LL(f) as a binary form.
BinaryForm ll_binary_form(const BivariateLaurent& f, const Tolerances& tol = {});

/// Optimal-matching sum of chordal distances, multiplicities expanded.
/// Throws DegreeMismatch for divisors of different degree.
double divisor_distance(const DivisorCP1& a, const DivisorCP1& b);

/// Minimum-cost perfect matching on a square cost matrix (row-major);
/// returns the column assigned to each row.
std::vector<int> hungarian(const std::vector<double>& cost, int n);

}  // namespace logamoeba
