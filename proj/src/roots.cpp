#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "logamoeba/error.hpp"
#include "logamoeba/univariate.hpp"

namespace logamoeba {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Evaluation {
  cplx newton;     // p / p'
  double log_abs;  // log |p(x)|
  double log_mag;  // log sum |c_k| |x|^k
  bool exact_zero;
};

double modulus(cplx x) { return std::abs(x); }
double modulus(const wcplx& x) { return std::abs(x.narrow()); }
cplx to_double(cplx x) { return x; }
cplx to_double(const wcplx& x) { return x.narrow(); }

// Evaluates with the reversed polynomial outside the unit disk so that large
// iterates do not overflow. C is cplx or, for double-double coefficients, wcplx.
template <class C>
Evaluation evaluate(const std::vector<C>& c, cplx x_in) {
  const int n = static_cast<int>(c.size()) - 1;
  const double ax = std::abs(x_in);
  const C zero = C(cplx(0.0));
  Evaluation ev{};
  if (ax <= 1.0) {
    const C x = C(x_in);
    C p = c[n], dp = zero;
    double mag = modulus(c[n]);
    for (int k = n - 1; k >= 0; --k) {
      dp = dp * x + p;
      p = p * x + c[k];
      mag = mag * ax + modulus(c[k]);
    }
    ev.exact_zero = (p == zero);
    ev.newton = (dp == zero) ? cplx(0.0) : to_double(p / dp);
    ev.log_abs = std::log(modulus(p));
    ev.log_mag = std::log(mag);
    return ev;
  }
  // p(x) = x^n r(y), y = 1/x, r(y) = sum c_k y^(n-k)
  const C y = C(1.0 / x_in);
  const double ay = 1.0 / ax;
  C r = c[0], dr = zero;
  double mag = modulus(c[0]);
  for (int k = 1; k <= n; ++k) {
    dr = dr * y + r;
    r = r * y + c[k];
    mag = mag * ay + modulus(c[k]);
  }
  ev.exact_zero = (r == zero);
  const C denom = C(cplx(double(n))) - y * dr / r;
  ev.newton = (r == zero || denom == zero) ? cplx(0.0) : x_in / to_double(denom);
  ev.log_abs = n * std::log(ax) + std::log(modulus(r));
  ev.log_mag = n * std::log(ax) + std::log(mag);
  return ev;
}

// Initial approximations on circles read off the upper convex hull of
// (k, log|c_k|).
std::vector<cplx> initial_guesses(const std::vector<cplx>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<int> hull;
  for (int k = 0; k <= n; ++k) {
    if (c[k] == 0.0) continue;
    const double yk = std::log(std::abs(c[k]));
    while (hull.size() >= 2) {
      const int i = hull[hull.size() - 2], j = hull.back();
      const double yi = std::log(std::abs(c[i])), yj = std::log(std::abs(c[j]));
      // drop j when it lies on or below the chord from i to k
      if ((yj - yi) * (k - i) <= (yk - yi) * (j - i)) hull.pop_back();
      else break;
    }
    hull.push_back(k);
  }
  std::vector<cplx> z;
  z.reserve(n);
  constexpr double sigma = 0.7;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const int k0 = hull[s], k1 = hull[s + 1];
    const int count = k1 - k0;
    const double radius = std::pow(std::abs(c[k0]) / std::abs(c[k1]), 1.0 / count);
    for (int j = 0; j < count; ++j) {
      const double angle = 2.0 * std::numbers::pi * (double(j) / count + double(k0) / n) + sigma;
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

}  // namespace

RootSet roots(const UnivariatePoly& p, const RootOptions& opts) {
  if (p.degree() < 1) throw Error(ErrorCode::InvalidInput, "roots: degree must be at least 1");

  const int zeros = p.trailing_zeros();
  std::vector<cplx> c(p.coefficients().begin() + zeros, p.coefficients().end());
  const int n = static_cast<int>(c.size()) - 1;

  RootSet out;
  std::vector<cplx> z;
  std::vector<double> radius;

  // Double-double coefficients are evaluated in extended precision.
  const bool wide_eval = !p.low_parts().empty();
  std::vector<wcplx> cw;
  if (wide_eval) {
    for (int k = 0; k <= n; ++k) cw.push_back(wcplx(c[k]) + wcplx(p.low_parts()[zeros + k]));
  }
  auto eval = [&](cplx x) { return wide_eval ? evaluate(cw, x) : evaluate(c, x); };
  const double floor_eps = wide_eval ? kWideEps : kEps;

  if (n == 1) {
    z = {wide_eval ? (-cw[0] / cw[1]).narrow() : -c[0] / c[1]};
  } else if (n >= 2) {
    z = initial_guesses(c);
    std::vector<char> done(n, 0);
    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
      bool all_done = true;
      for (int k = 0; k < n; ++k) {
        if (done[k]) continue;
        const Evaluation ev = eval(z[k]);
        if (ev.exact_zero || ev.log_abs <= std::log(4.0 * floor_eps * n) + ev.log_mag) {
          done[k] = 1;
          continue;
        }
        all_done = false;
        cplx s = 0.0;
        for (int j = 0; j < n; ++j)
          if (j != k) s += 1.0 / (z[k] - z[j]);
        const cplx corr = ev.newton / (1.0 - ev.newton * s);
        if (std::isfinite(corr.real()) && std::isfinite(corr.imag())) z[k] -= corr;
        // below the resolution of the iterate itself
        if (std::abs(corr) <= 2.0 * kEps * std::abs(z[k])) done[k] = 1;
      }
      if (all_done) break;
    }
    out.iterations = iter;
    out.converged = iter < opts.max_iterations;
  }

  // Inclusion radii n |W_k|, W_k = p(z_k) / (c_n prod (z_k - z_j)), with the
  // value replaced by an error bound when it is at rounding level.
  radius.assign(n, 0.0);
  const double log_noise = std::log(std::max(4.0 * floor_eps * n, opts.coefficient_noise));
  for (int k = 0; k < n; ++k) {
    const Evaluation ev = eval(z[k]);
    const double log_value = std::max(ev.exact_zero ? -INFINITY : ev.log_abs, log_noise + ev.log_mag);
    double log_prod = std::log(std::abs(c[n]));
    for (int j = 0; j < n; ++j)
      if (j != k) log_prod += std::log(std::abs(z[k] - z[j]));
    radius[k] = n * std::exp(log_value - log_prod);
  }

  // Union-find over overlapping disks.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = std::abs(z[i] - z[j]);
      const double floor = opts.cluster * std::max(std::abs(z[i]), std::abs(z[j]));
      if (d <= radius[i] + radius[j] || d <= floor) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<int>> groups(n);
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);

  const double norm = p.norm1();
  const int deg = p.degree();
  for (const auto& g : groups) {
    if (g.empty()) continue;
    cplx center = 0.0;
    for (int i : g) center += z[i];
    center /= double(g.size());
    double diameter = 0.0;
    for (int i : g)
      for (int j : g) diameter = std::max(diameter, std::abs(z[i] - z[j]));
    out.roots.push_back({center, static_cast<int>(g.size()), diameter});
  }
  if (zeros > 0) out.roots.push_back({0.0, zeros, 0.0});

  for (const auto& r : out.roots) {
    const double res = std::abs(p(r.value));
    const double bound = norm * std::pow(std::max(1.0, std::abs(r.value)), deg);
    const double rel = bound > 0 ? res / bound : 0.0;
    if (std::isfinite(rel)) out.max_residual = std::max(out.max_residual, rel);
    if (!(rel <= opts.residual) && std::isfinite(bound)) out.converged = false;
  }

  std::sort(out.roots.begin(), out.roots.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace logamoeba
