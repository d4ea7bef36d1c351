#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's root finder or resultant.

#include <Eigen/Eigenvalues>
#include <complex>
#include <vector>

namespace testing {

using cplx = std::complex<double>;

// Roots of sum c_k x^k as eigenvalues of the companion matrix.
inline std::vector<cplx> companion_roots(std::vector<cplx> c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) A(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) A(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A, false);
  std::vector<cplx> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return out;
}

// Distance from x to the nearest point of a set.
inline double nearest(const std::vector<cplx>& set, cplx x) {
  double best = 1e300;
  for (cplx y : set) best = std::min(best, std::abs(x - y));
  return best;
}

// Dense complex determinant by Eigen's LU.
inline cplx dense_determinant(const std::vector<cplx>& a, int n) {
  Eigen::MatrixXcd M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = a[i * n + j];
  return M.fullPivLu().determinant();
}

// Sylvester matrix of p = sum p_k x^k (degree m) and q (degree n), rows of p first.
inline cplx sylvester_by_definition(const std::vector<cplx>& p, const std::vector<cplx>& q) {
  const int m = static_cast<int>(p.size()) - 1, n = static_cast<int>(q.size()) - 1, s = m + n;
  std::vector<cplx> a(s * s, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) a[i * s + i + k] = p[m - k];
  for (int j = 0; j < m; ++j)
    for (int k = 0; k <= n; ++k) a[(n + j) * s + j + k] = q[n - k];
  return dense_determinant(a, s);
}

}  // namespace testing
