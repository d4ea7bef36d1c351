#include "logamoeba/wide.hpp"

namespace logamoeba {

wcplx wide_unit_root(long num, long den) {
  num %= den;
  if (num < 0) num += den;
  // reduce the angle to [-pi, pi]
  if (2 * num > den) num -= den;
  // pi to about 32 digits as a sum of two doubles
  const wide pi = wide(3.141592653589793116) + wide(1.2246467991473532e-16);
  const wide angle = 2 * pi * wide(num) / wide(den);
  wcplx sum(1, 0), term(1, 0);
  const wcplx i_angle(0, angle);
  for (int k = 1; k < 64; ++k) {
    term = term * i_angle / wcplx(wide(k), 0);
    sum = sum + term;
  }
  return sum;
}

}  // namespace logamoeba
