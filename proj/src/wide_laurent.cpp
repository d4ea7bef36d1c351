#include "logamoeba/wide_laurent.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace logamoeba {

namespace {

// Powers x^lo .. x^hi.
std::vector<wcplx> power_table(wcplx x, int lo, int hi) {
  std::vector<wcplx> out(hi - lo + 1);
  const wcplx one(1, 0);
  wcplx p = one;
  if (lo > 0) {
    for (int k = 0; k < lo; ++k) p = p * x;
  } else {
    const wcplx inv = one / x;
    for (int k = 0; k < -lo; ++k) p = p * inv;
  }
  for (int k = lo; k <= hi; ++k) {
    out[k - lo] = p;
    p = p * x;
  }
  return out;
}

}  // namespace

WideLaurent::WideLaurent(const BivariateLaurent& f) {
  for (const auto& [e, c] : f.terms()) terms_[e] = wcplx(c);
}

void WideLaurent::add_term(Exponent e, wcplx c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.zero()) terms_.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.zero()) terms_.erase(it);
}

Exponent WideLaurent::min_exponents() const {
  Exponent m{0, 0};
  bool first = true;
  for (const auto& [e, c] : terms_) {
    m = first ? e : Exponent{std::min(m.a, e.a), std::min(m.b, e.b)};
    first = false;
  }
  return m;
}

Exponent WideLaurent::max_exponents() const {
  Exponent m{0, 0};
  bool first = true;
  for (const auto& [e, c] : terms_) {
    m = first ? e : Exponent{std::max(m.a, e.a), std::max(m.b, e.b)};
    first = false;
  }
  return m;
}

WideLaurent WideLaurent::d_dz() const {
  WideLaurent out;
  for (const auto& [e, c] : terms_)
    if (e.a != 0) out.add_term({e.a - 1, e.b}, c * wcplx(wide(e.a), 0));
  return out;
}

WideLaurent WideLaurent::d_dw() const {
  WideLaurent out;
  for (const auto& [e, c] : terms_)
    if (e.b != 0) out.add_term({e.a, e.b - 1}, c * wcplx(wide(e.b), 0));
  return out;
}

WideLaurent WideLaurent::log_dz() const {
  WideLaurent out;
  for (const auto& [e, c] : terms_)
    if (e.a != 0) out.add_term(e, c * wcplx(wide(e.a), 0));
  return out;
}

WideLaurent WideLaurent::log_dw() const {
  WideLaurent out;
  for (const auto& [e, c] : terms_)
    if (e.b != 0) out.add_term(e, c * wcplx(wide(e.b), 0));
  return out;
}

wcplx WideLaurent::eval(wcplx z, wcplx w) const {
  if (terms_.empty()) return {};
  const Exponent lo = min_exponents(), hi = max_exponents();
  const std::vector<wcplx> zp = power_table(z, lo.a, hi.a);
  const std::vector<wcplx> wp = power_table(w, lo.b, hi.b);
  wcplx acc;
  for (const auto& [e, c] : terms_) acc = acc + c * zp[e.a - lo.a] * wp[e.b - lo.b];
  return acc;
}

double WideLaurent::magnitude(cplx z, cplx w) const {
  const double az = std::abs(z), aw = std::abs(w);
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += std::abs(c.narrow()) * std::pow(az, e.a) * std::pow(aw, e.b);
  return s;
}

double WideLaurent::relative_residual(wcplx z, wcplx w) const {
  const double mag = magnitude(z.narrow(), w.narrow());
  if (mag == 0.0) return 0.0;
  return std::abs(eval(z, w).narrow()) / mag;
}

BivariateLaurent WideLaurent::narrow() const {
  BivariateLaurent out;
  for (const auto& [e, c] : terms_) {
    const cplx d = c.narrow();
    if (d != 0.0) out.add_term(e, d);
  }
  return out;
}

WideLaurent operator+(const WideLaurent& x, const WideLaurent& y) {
  WideLaurent out = x;
  for (const auto& [e, c] : y.terms_) out.add_term(e, c);
  return out;
}

WideLaurent operator-(const WideLaurent& x, const WideLaurent& y) {
  WideLaurent out = x;
  for (const auto& [e, c] : y.terms_) out.add_term(e, -c);
  return out;
}

WideLaurent operator*(const WideLaurent& x, const WideLaurent& y) {
  WideLaurent out;
  for (const auto& [e1, c1] : x.terms_)
    for (const auto& [e2, c2] : y.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

}  // namespace logamoeba
