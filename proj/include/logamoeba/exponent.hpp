#pragma once

#include <compare>

namespace logamoeba {

// Integer exponent pair (a, b) of the monomial z^a w^b; also a point of Z^2.
struct Exponent {
  int a = 0;
  int b = 0;

  friend constexpr auto operator<=>(const Exponent&, const Exponent&) = default;
  friend constexpr Exponent operator+(Exponent x, Exponent y) { return {x.a + y.a, x.b + y.b}; }
  friend constexpr Exponent operator-(Exponent x, Exponent y) { return {x.a - y.a, x.b - y.b}; }
};

}  // namespace logamoeba
