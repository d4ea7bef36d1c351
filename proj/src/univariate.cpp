#include "logamoeba/univariate.hpp"

#include <algorithm>
#include <cmath>

namespace logamoeba {

UnivariatePoly::UnivariatePoly(std::vector<cplx> coefficients) : c_(std::move(coefficients)) {
  normalize();
}

void UnivariatePoly::normalize() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
  if (!lo_.empty()) lo_.resize(c_.size());
}

UnivariatePoly UnivariatePoly::from_wide(const std::vector<wcplx>& coefficients) {
  UnivariatePoly p;
  for (const wcplx& c : coefficients) {
    p.c_.push_back(c.narrow());
    p.lo_.push_back(c.remainder());
  }
  p.normalize();
  return p;
}

UnivariatePoly UnivariatePoly::from_roots(std::span<const cplx> roots, cplx leading) {
  std::vector<cplx> c{leading};
  for (cplx r : roots) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return UnivariatePoly(std::move(c));
}

cplx UnivariatePoly::operator()(cplx x) const {
  cplx acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UnivariatePoly::magnitude(double abs_x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * abs_x + std::abs(*it);
  return acc;
}

double UnivariatePoly::norm1() const {
  double s = 0.0;
  for (cplx c : c_) s += std::abs(c);
  return s;
}

double UnivariatePoly::norm_inf() const {
  double s = 0.0;
  for (cplx c : c_) s = std::max(s, std::abs(c));
  return s;
}

UnivariatePoly UnivariatePoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<cplx> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * double(k);
  return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::trimmed(double rel) const {
  const double cut = rel * norm_inf();
  std::vector<cplx> c = c_;
  while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
  for (auto& x : c) {
    if (std::abs(x) <= cut) x = 0.0;
    else break;
  }
  return UnivariatePoly(std::move(c));
}

int UnivariatePoly::trailing_zeros() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[k] == 0.0) ++k;
  return k;
}

UnivariatePoly operator*(const UnivariatePoly& p, const UnivariatePoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<cplx> c(p.c_.size() + q.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.c_.size(); ++i)
    for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
  return UnivariatePoly(std::move(c));
}

int RootSet::total_multiplicity() const {
  int s = 0;
  for (const auto& r : roots) s += r.multiplicity;
  return s;
}

std::vector<cplx> RootSet::values() const {
  std::vector<cplx> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.value);
  return out;
}

}  // namespace logamoeba
