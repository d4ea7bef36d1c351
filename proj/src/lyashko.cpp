#include "logamoeba/lyashko.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "logamoeba/error.hpp"

namespace logamoeba {

void DivisorCP1::add(const ProjPoint& p, int mult, double tol) {
  if (mult <= 0) return;
  for (auto& e : entries_) {
    if (projectively_equal(e.point, p, tol)) {
      e.multiplicity += mult;
      return;
    }
  }
  entries_.push_back({p, mult});
}

void DivisorCP1::add(const DivisorCP1& other, double tol) {
  for (const auto& e : other.entries_) add(e.point, e.multiplicity, tol);
}

int DivisorCP1::degree() const {
  int d = 0;
  for (const auto& e : entries_) d += e.multiplicity;
  return d;
}

DivisorCP1 DivisorCP1::conj(double tol) const {
  DivisorCP1 out;
  for (const auto& e : entries_) out.add(e.point.conj(), e.multiplicity, tol);
  return out;
}

double DivisorCP1::distance_to_real() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& e : entries_) m = std::min(m, e.point.distance_to_real());
  return m;
}

BinaryForm BinaryForm::normalized() const {
  BinaryForm out = *this;
  cplx big = 0.0;
  for (cplx c : coefficients)
    if (std::abs(c) > std::abs(big)) big = c;
  if (big != 0.0)
    for (cplx& c : out.coefficients) c /= big;
  return out;
}

DivisorCP1 BinaryForm::divisor(const Tolerances& tol) const {
  DivisorCP1 D;
  const UnivariatePoly p = UnivariatePoly(coefficients).trimmed(1e-14);
  const int m = degree();
  if (p.degree() < m) D.add(ProjPoint(1.0, 0.0), m - std::max(p.degree(), 0), tol.projective);
  if (p.degree() >= 1) {
    RootOptions ro;
    ro.cluster = tol.cluster;
    for (const Root& r : roots(p, ro).roots) D.add(ProjPoint::from_affine(r.value), r.multiplicity, tol.projective);
  }
  return D;
}

BinaryForm binary_form(const DivisorCP1& D) {
  // coefficients[k] multiplies u^k v^(m-k)
  std::vector<cplx> c{1.0};
  for (const auto& e : D.entries()) {
    for (int i = 0; i < e.multiplicity; ++i) {
      // factor v_i u - u_i v
      std::vector<cplx> next(c.size() + 1, 0.0);
      for (std::size_t k = 0; k < c.size(); ++k) {
        next[k + 1] += e.point.v() * c[k];
        next[k] -= e.point.u() * c[k];
      }
      c = std::move(next);
    }
  }
  return BinaryForm{c}.normalized();
}

double projective_coefficient_distance(const BinaryForm& a, const BinaryForm& b) {
  if (a.coefficients.size() != b.coefficients.size()) return std::numeric_limits<double>::infinity();
  cplx ab = 0.0;
  double bb = 0.0, aa = 0.0;
  for (std::size_t k = 0; k < a.coefficients.size(); ++k) {
    ab += std::conj(b.coefficients[k]) * a.coefficients[k];
    bb += std::norm(b.coefficients[k]);
    aa += std::norm(a.coefficients[k]);
  }
  if (aa == 0.0 || bb == 0.0) return std::numeric_limits<double>::infinity();
  const cplx s = ab / bb;
  double err = 0.0;
  for (std::size_t k = 0; k < a.coefficients.size(); ++k) err += std::norm(a.coefficients[k] - s * b.coefficients[k]);
  return std::sqrt(err / aa);
}

DivisorCP1 push_forward(const CriticalPointSet& crit, double tol) {
  DivisorCP1 D;
  for (const auto& p : crit.points) D.add(p.branch_value, p.multiplicity, tol);
  return D;
}

DivisorCP1 ll_divisor(const BivariateLaurent& f, const Tolerances& tol) {
  return push_forward(critical_points(f, tol), tol.projective);
}

BinaryForm ll_binary_form(const BivariateLaurent& f, const Tolerances& tol) {
  return binary_form(ll_divisor(f, tol));
}

std::vector<int> hungarian(const std::vector<double>& cost, int n) {
  // Potentials formulation, 1-based internally.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> assignment(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] > 0) assignment[p[j] - 1] = j - 1;
  return assignment;
}

double divisor_distance(const DivisorCP1& a, const DivisorCP1& b) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::DegreeMismatch, "divisors have different degrees");
  std::vector<ProjPoint> xa, xb;
  for (const auto& e : a.entries())
    for (int i = 0; i < e.multiplicity; ++i) xa.push_back(e.point);
  for (const auto& e : b.entries())
    for (int i = 0; i < e.multiplicity; ++i) xb.push_back(e.point);
  const int n = static_cast<int>(xa.size());
  if (n == 0) return 0.0;
  std::vector<double> cost(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cost[i * n + j] = chordal_distance(xa[i], xb[j]);
  const std::vector<int> match = hungarian(cost, n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += cost[i * n + match[i]];
  return total;
}

}  // namespace logamoeba
