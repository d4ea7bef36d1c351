#include "logamoeba/resultant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "logamoeba/error.hpp"
#include "logamoeba/wide.hpp"

namespace logamoeba {

namespace {

// Exponents of f in (eliminated, kept) order, cleared of negative values.
struct Split {
  int elim;
  int kept;
};

Split split(Exponent e, Exponent min, Variable var) {
  const Exponent s = e - min;
  return var == Variable::w ? Split{s.b, s.a} : Split{s.a, s.b};
}

template <class Poly>
int kept_degree(const Poly& f, Variable eliminate) {
  const Exponent lo = f.min_exponents(), hi = f.max_exponents();
  return eliminate == Variable::w ? hi.a - lo.a : hi.b - lo.b;
}

// Sylvester determinants are often many orders of magnitude below their
// row-norm bound, so elimination and interpolation run in extended precision.

// In-place LU with partial pivoting; returns the determinant.
wcplx determinant(std::vector<wcplx>& a, int n) {
  wcplx det(1, 0);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (a[r * n + col].l1() > a[piv * n + col].l1()) piv = r;
    if (a[piv * n + col].zero()) return {};
    if (piv != col) {
      for (int k = 0; k < n; ++k) std::swap(a[col * n + k], a[piv * n + k]);
      det = -det;
    }
    const wcplx d = a[col * n + col];
    det = det * d;
    for (int r = col + 1; r < n; ++r) {
      if (a[r * n + col].zero()) continue;
      const wcplx factor = a[r * n + col] / d;
      for (int k = col + 1; k < n; ++k) a[r * n + k] = a[r * n + k] - factor * a[col * n + k];
    }
  }
  return det;
}

struct SylvesterSample {
  wcplx det;
  double hadamard;  // product of row 2-norms
};

SylvesterSample sylvester_sample(const WideLaurent& p, const WideLaurent& q, Variable eliminate, wcplx kept) {
  const std::vector<wcplx> pc = slice(p, eliminate, kept);
  const std::vector<wcplx> qc = slice(q, eliminate, kept);
  const int m = degree_in(p, eliminate);
  const int n = degree_in(q, eliminate);
  auto norm2 = [](const std::vector<wcplx>& c) {
    double s = 0.0;
    for (const auto& x : c) s += std::norm(x.narrow());
    return std::sqrt(s);
  };
  auto power = [](wcplx x, int k) {
    wcplx r(1, 0);
    for (int i = 0; i < k; ++i) r = r * x;
    return r;
  };

  if (m == 0 && n == 0) return {wcplx(1, 0), 1.0};
  if (m == 0) return {power(pc[0], n), std::pow(std::abs(pc[0].narrow()), n)};
  if (n == 0) return {power(qc[0], m), std::pow(std::abs(qc[0].narrow()), m)};

  const int size = m + n;
  std::vector<wcplx> a(size * size);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) a[i * size + i + k] = pc[m - k];
  for (int j = 0; j < m; ++j)
    for (int k = 0; k <= n; ++k) a[(n + j) * size + j + k] = qc[n - k];
  const double hadamard = std::pow(norm2(pc), n) * std::pow(norm2(qc), m);
  return {determinant(a, size), hadamard};
}

}  // namespace

int degree_in(const BivariateLaurent& f, Variable var) {
  if (f.is_zero()) return 0;
  const Exponent lo = f.min_exponents(), hi = f.max_exponents();
  return var == Variable::w ? hi.b - lo.b : hi.a - lo.a;
}

std::vector<cplx> slice(const BivariateLaurent& f, Variable var, cplx other_value,
                        std::vector<double>* majorant) {
  const int deg = degree_in(f, var);
  std::vector<cplx> c(deg + 1, 0.0);
  if (majorant) majorant->assign(deg + 1, 0.0);
  const Exponent lo = f.min_exponents();
  const double ax = std::abs(other_value);
  for (const auto& [e, coef] : f.terms()) {
    const Split s = split(e, lo, var);
    c[s.elim] += coef * ipow(other_value, s.kept);
    if (majorant) (*majorant)[s.elim] += std::abs(coef) * std::pow(ax, s.kept);
  }
  return c;
}

int degree_in(const WideLaurent& f, Variable var) {
  if (f.is_zero()) return 0;
  const Exponent lo = f.min_exponents(), hi = f.max_exponents();
  return var == Variable::w ? hi.b - lo.b : hi.a - lo.a;
}

std::vector<wcplx> slice(const WideLaurent& f, Variable var, wcplx other_value, std::vector<double>* majorant) {
  const int deg = degree_in(f, var);
  std::vector<wcplx> c(deg + 1);
  if (majorant) majorant->assign(deg + 1, 0.0);
  const Exponent lo = f.min_exponents();
  const double ax = std::abs(other_value.narrow());
  for (const auto& [e, coef] : f.terms()) {
    const Split s = split(e, lo, var);
    wcplx t = coef;
    for (int k = 0; k < s.kept; ++k) t = t * other_value;
    c[s.elim] = c[s.elim] + t;
    if (majorant) (*majorant)[s.elim] += std::abs(coef.narrow()) * std::pow(ax, s.kept);
  }
  return c;
}

int sylvester_size(const BivariateLaurent& p, const BivariateLaurent& q, Variable var) {
  return degree_in(p, var) + degree_in(q, var);
}

int sylvester_size(const WideLaurent& p, const WideLaurent& q, Variable var) {
  return degree_in(p, var) + degree_in(q, var);
}

cplx sylvester_determinant(const BivariateLaurent& p, const BivariateLaurent& q, Variable eliminate,
                           cplx kept) {
  return sylvester_sample(WideLaurent(p), WideLaurent(q), eliminate, wcplx(kept)).det.narrow();
}

Eliminant sylvester_resultant(const BivariateLaurent& p, const BivariateLaurent& q, Variable eliminate,
                              const ResultantOptions& opts) {
  return sylvester_resultant(WideLaurent(p), WideLaurent(q), eliminate, opts);
}

Eliminant sylvester_resultant(const WideLaurent& p, const WideLaurent& q, Variable eliminate,
                              const ResultantOptions& opts) {
  if (p.is_zero() || q.is_zero()) {
    throw Error(ErrorCode::IdenticallyZeroResultant, "resultant of a zero polynomial");
  }
  const int m = degree_in(p, eliminate);
  const int n = degree_in(q, eliminate);
  const int bound = n * kept_degree(p, eliminate) + m * kept_degree(q, eliminate);
  const int samples = bound + 1;

  // Two interpolations on rotated copies of the roots of unity; their
  // disagreement measures the evaluation noise in each coefficient.
  // Coefficients are of the rescaled variable kept / radius.
  std::vector<wcplx> unit(2 * samples);
  for (int m2 = 0; m2 < 2 * samples; ++m2) unit[m2] = wide_unit_root(m2, 2 * samples);
  double worst = 0.0;
  auto interpolate = [&](double radius, int half_step) {
    std::vector<wcplx> values(samples);
    for (int j = 0; j < samples; ++j) {
      const wcplx x = wcplx(cplx(radius)) * unit[2 * j + half_step];
      const SylvesterSample s = sylvester_sample(p, q, eliminate, x);
      values[j] = s.det;
      if (s.hadamard > 0.0) worst = std::max(worst, std::abs(s.det.narrow()) / s.hadamard);
    }
    std::vector<wcplx> coeffs(samples);
    const wcplx count(wide(samples), 0);
    for (int k = 0; k < samples; ++k) {
      wcplx acc;
      for (int j = 0; j < samples; ++j) {
        const long idx = (long(2 * j + half_step) * k) % (2 * samples);
        acc = acc + values[j] * unit[(2 * samples - idx) % (2 * samples)];
      }
      coeffs[k] = acc / count;
    }
    return coeffs;
  };

  const double eps = std::numeric_limits<double>::epsilon();
  Eliminant out;
  out.eliminated = eliminate;
  out.degree_bound = bound;
  std::vector<wcplx> scaled;
  auto run = [&](double radius) {
    worst = 0.0;
    const std::vector<wcplx> first = interpolate(radius, 0);
    const std::vector<wcplx> second = interpolate(radius, 1);
    scaled.assign(samples, {});
    double spread = 0.0, largest = 0.0;
    const wcplx half(wide(0.5), 0);
    for (int k = 0; k < samples; ++k) {
      scaled[k] = half * (first[k] + second[k]);
      spread = std::max(spread, std::abs((first[k] - second[k]).narrow()));
      largest = std::max(largest, std::abs(scaled[k].narrow()));
    }
    // The Hadamard bound alone is too loose for large matrices: a genuine
    // resultant must also stand clear of its own evaluation noise.
    if (worst <= opts.zero && largest <= 100.0 * spread) {
      throw Error(ErrorCode::IdenticallyZeroResultant,
                  "Sylvester resultant vanishes identically (common factor)");
    }
    out.radius = radius;
    out.noise = largest > 0.0 ? std::max(spread / largest, eps * eps) : 0.0;
    // Trim in the balanced variable.
    const double cut = std::max(opts.trim, 10.0 * out.noise) * largest;
    int top = samples - 1;
    while (top >= 0 && std::abs(scaled[top].narrow()) <= cut) --top;
    scaled.resize(top + 1);
    for (auto& c : scaled) {
      if (std::abs(c.narrow()) > cut) break;
      c = wcplx();
    }
    out.scaled = UnivariatePoly::from_wide(scaled);
  };

  if (opts.radius > 0.0) {
    run(opts.radius);
  } else {
    run(1.0);
    // Re-centre on the geometric mean of the root moduli.
    const int lo = out.scaled.trailing_zeros(), hi = out.scaled.degree();
    if (hi > lo) {
      const double r = std::pow(std::abs(out.scaled[lo]) / std::abs(out.scaled[hi]), 1.0 / (hi - lo));
      if (std::isfinite(r) && r > 0.0 && std::abs(std::log(r)) > std::log(2.0)) run(r);
    }
  }
  const wcplx inv(wide(1) / wide(out.radius), 0);
  wcplx factor(1, 0);
  for (auto& c : scaled) {
    c = c * factor;
    factor = factor * inv;
  }
  out.poly = UnivariatePoly::from_wide(scaled);
  return out;
}

}  // namespace logamoeba
