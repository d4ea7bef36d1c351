#pragma once

#include <map>

#include "logamoeba/exponent.hpp"
#include "logamoeba/laurent.hpp"
#include "logamoeba/wide.hpp"

namespace logamoeba {

/// Laurent polynomial with extended-precision coefficients. Used where
/// expanded coefficients must survive heavy cancellation (the ramification
/// polynomial near nodes) and inside elimination.
class WideLaurent {
 public:
  using TermMap = std::map<Exponent, wcplx>;

  WideLaurent() = default;
  explicit WideLaurent(const BivariateLaurent& f);

  void add_term(Exponent e, wcplx c);
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Exponent min_exponents() const;
  Exponent max_exponents() const;

  WideLaurent d_dz() const;
  WideLaurent d_dw() const;
  WideLaurent log_dz() const;
  WideLaurent log_dw() const;

  wcplx eval(wcplx z, wcplx w) const;
  /// sum |c| |z|^a |w|^b
  double magnitude(cplx z, cplx w) const;
  double relative_residual(wcplx z, wcplx w) const;

  BivariateLaurent narrow() const;

  friend WideLaurent operator+(const WideLaurent& x, const WideLaurent& y);
  friend WideLaurent operator-(const WideLaurent& x, const WideLaurent& y);
  friend WideLaurent operator*(const WideLaurent& x, const WideLaurent& y);

 private:
  TermMap terms_;
};

}  // namespace logamoeba
