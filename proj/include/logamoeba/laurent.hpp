#pragma once

#include <complex>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "logamoeba/exponent.hpp"

namespace logamoeba {

using cplx = std::complex<double>;

// z^n for integer n, by repeated squaring.
cplx ipow(cplx z, int n);

/// Sparse bivariate Laurent polynomial f(z,w) = sum c_(a,b) z^a w^b.
///
/// Terms with an exactly-zero coefficient are never stored. Small
/// coefficients are kept until pruned explicitly with pruned().
class BivariateLaurent {
 public:
  using TermMap = std::map<Exponent, cplx>;

  BivariateLaurent() = default;
  explicit BivariateLaurent(const TermMap& terms);
  BivariateLaurent(std::initializer_list<std::pair<Exponent, cplx>> terms);

  static BivariateLaurent monomial(Exponent e, cplx c = 1.0);
  static BivariateLaurent constant(cplx c) { return monomial({0, 0}, c); }

  void add_term(Exponent e, cplx c);
  cplx coeff(Exponent e) const;

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::vector<Exponent> support() const;

  Exponent min_exponents() const;
  Exponent max_exponents() const;
  double max_abs_coeff() const;
  bool has_negative_exponents() const;
  bool has_real_coefficients(double tol = 0.0) const;

  /// Throws EvalAtTorusBoundary when a zero coordinate meets a negative exponent.
  cplx eval(cplx z, cplx w) const;
  /// sum |c| |z^a w^b|, the natural scale for residuals.
  double magnitude(cplx z, cplx w) const;
  /// |f(z,w)| / magnitude(z,w).
  double relative_residual(cplx z, cplx w) const;

  BivariateLaurent d_dz() const;
  BivariateLaurent d_dw() const;
  /// z * df/dz; keeps the support.
  BivariateLaurent log_dz() const;
  /// w * df/dw; keeps the support.
  BivariateLaurent log_dw() const;

  BivariateLaurent shifted(Exponent e) const;
  /// g(z,w) = f(lambda z, mu w).
  BivariateLaurent toric_translate(cplx lambda, cplx mu) const;
  BivariateLaurent conj() const;
  /// Drops terms with |c| <= rel * max|c|.
  BivariateLaurent pruned(double rel) const;

  BivariateLaurent& operator+=(const BivariateLaurent& o);
  BivariateLaurent& operator-=(const BivariateLaurent& o);
  BivariateLaurent& operator*=(cplx s);

  friend BivariateLaurent operator+(BivariateLaurent x, const BivariateLaurent& y) { return x += y; }
  friend BivariateLaurent operator-(BivariateLaurent x, const BivariateLaurent& y) { return x -= y; }
  friend BivariateLaurent operator*(BivariateLaurent x, cplx s) { return x *= s; }
  friend BivariateLaurent operator*(cplx s, BivariateLaurent x) { return x *= s; }
  friend BivariateLaurent operator*(const BivariateLaurent& x, const BivariateLaurent& y);
  BivariateLaurent operator-() const { return *this * cplx(-1.0); }

  friend bool operator==(const BivariateLaurent&, const BivariateLaurent&) = default;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const BivariateLaurent& f);

}  // namespace logamoeba
