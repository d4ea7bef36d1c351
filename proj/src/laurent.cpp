#include "logamoeba/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "logamoeba/error.hpp"

namespace logamoeba {

cplx ipow(cplx z, int n) {
  if (n < 0) return cplx(1.0) / ipow(z, -n);
  cplx result = 1.0;
  cplx base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

BivariateLaurent::BivariateLaurent(const TermMap& terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

BivariateLaurent::BivariateLaurent(std::initializer_list<std::pair<Exponent, cplx>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

BivariateLaurent BivariateLaurent::monomial(Exponent e, cplx c) {
  BivariateLaurent f;
  f.add_term(e, c);
  return f;
}

void BivariateLaurent::add_term(Exponent e, cplx c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

cplx BivariateLaurent::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

std::vector<Exponent> BivariateLaurent::support() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

Exponent BivariateLaurent::min_exponents() const {
  if (terms_.empty()) return {0, 0};
  Exponent m{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
  for (const auto& [e, c] : terms_) {
    m.a = std::min(m.a, e.a);
    m.b = std::min(m.b, e.b);
  }
  return m;
}

Exponent BivariateLaurent::max_exponents() const {
  if (terms_.empty()) return {0, 0};
  Exponent m{std::numeric_limits<int>::min(), std::numeric_limits<int>::min()};
  for (const auto& [e, c] : terms_) {
    m.a = std::max(m.a, e.a);
    m.b = std::max(m.b, e.b);
  }
  return m;
}

double BivariateLaurent::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

bool BivariateLaurent::has_negative_exponents() const {
  const Exponent m = min_exponents();
  return m.a < 0 || m.b < 0;
}

bool BivariateLaurent::has_real_coefficients(double tol) const {
  const double scale = max_abs_coeff();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return std::abs(t.second.imag()) <= tol * scale; });
}

namespace {

void check_torus(const BivariateLaurent& f, cplx z, cplx w) {
  const Exponent m = f.min_exponents();
  if ((z == 0.0 && m.a < 0) || (w == 0.0 && m.b < 0)) {
    throw Error(ErrorCode::EvalAtTorusBoundary, "negative exponent evaluated at a zero coordinate");
  }
}

}  // namespace

cplx BivariateLaurent::eval(cplx z, cplx w) const {
  check_torus(*this, z, w);
  cplx sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c * ipow(z, e.a) * ipow(w, e.b);
  return sum;
}

double BivariateLaurent::magnitude(cplx z, cplx w) const {
  check_torus(*this, z, w);
  const double az = std::abs(z);
  const double aw = std::abs(w);
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    sum += std::abs(c) * std::pow(az, e.a) * std::pow(aw, e.b);
  }
  return sum;
}

double BivariateLaurent::relative_residual(cplx z, cplx w) const {
  const double mag = magnitude(z, w);
  if (mag == 0.0) return 0.0;
  return std::abs(eval(z, w)) / mag;
}

BivariateLaurent BivariateLaurent::d_dz() const {
  BivariateLaurent out;
  for (const auto& [e, c] : terms_) out.add_term({e.a - 1, e.b}, c * double(e.a));
  return out;
}

BivariateLaurent BivariateLaurent::d_dw() const {
  BivariateLaurent out;
  for (const auto& [e, c] : terms_) out.add_term({e.a, e.b - 1}, c * double(e.b));
  return out;
}

BivariateLaurent BivariateLaurent::log_dz() const {
  BivariateLaurent out;
  for (const auto& [e, c] : terms_) out.add_term(e, c * double(e.a));
  return out;
}

BivariateLaurent BivariateLaurent::log_dw() const {
  BivariateLaurent out;
  for (const auto& [e, c] : terms_) out.add_term(e, c * double(e.b));
  return out;
}

BivariateLaurent BivariateLaurent::shifted(Exponent s) const {
  BivariateLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + s, c);
  return out;
}

BivariateLaurent BivariateLaurent::toric_translate(cplx lambda, cplx mu) const {
  BivariateLaurent out;
  for (const auto& [e, c] : terms_) out.add_term(e, c * ipow(lambda, e.a) * ipow(mu, e.b));
  return out;
}

BivariateLaurent BivariateLaurent::conj() const {
  BivariateLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, std::conj(c));
  return out;
}

BivariateLaurent BivariateLaurent::pruned(double rel) const {
  const double cut = rel * max_abs_coeff();
  BivariateLaurent out;
  for (const auto& [e, c] : terms_) {
    if (std::abs(c) > cut) out.terms_.emplace(e, c);
  }
  return out;
}

BivariateLaurent& BivariateLaurent::operator+=(const BivariateLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BivariateLaurent& BivariateLaurent::operator-=(const BivariateLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BivariateLaurent& BivariateLaurent::operator*=(cplx s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

BivariateLaurent operator*(const BivariateLaurent& x, const BivariateLaurent& y) {
  BivariateLaurent out;
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) out.add_term(ex + ey, cx * cy);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BivariateLaurent& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    if (e.a != 0) os << "*z^" << e.a;
    if (e.b != 0) os << "*w^" << e.b;
  }
  return os;
}

}  // namespace logamoeba
