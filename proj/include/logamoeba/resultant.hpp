#pragma once

#include "logamoeba/laurent.hpp"
#include "logamoeba/univariate.hpp"
#include "logamoeba/wide_laurent.hpp"

namespace logamoeba {

enum class Variable { z, w };

inline Variable other(Variable v) { return v == Variable::z ? Variable::w : Variable::z; }

/// Degree of f in `var` after clearing negative exponents by a monomial.
int degree_in(const BivariateLaurent& f, Variable var);

/// Coefficients (index = power of `var`) of f with the other variable fixed,
/// after clearing negative exponents. `majorant` receives sum |c| |x|^k per power.
std::vector<cplx> slice(const BivariateLaurent& f, Variable var, cplx other_value,
                        std::vector<double>* majorant = nullptr);

int degree_in(const WideLaurent& f, Variable var);
/// Extended-precision slice; the majorant is accumulated in double.
std::vector<wcplx> slice(const WideLaurent& f, Variable var, wcplx other_value,
                         std::vector<double>* majorant = nullptr);

/// Size of the Sylvester matrix eliminating `var`.
int sylvester_size(const BivariateLaurent& p, const BivariateLaurent& q, Variable var);
int sylvester_size(const WideLaurent& p, const WideLaurent& q, Variable var);

/// det of the Sylvester matrix of p, q in `eliminate`, with the kept variable
/// set to `kept` (both inputs cleared of negative exponents first).
cplx sylvester_determinant(const BivariateLaurent& p, const BivariateLaurent& q, Variable eliminate,
                           cplx kept);

struct ResultantOptions {
  double trim = 1e-11;
  double zero = 1e-11;
  double radius = 0.0;  // radius of the interpolation circle; 0 picks it from the roots
};

struct Eliminant {
  UnivariatePoly poly;  // in the kept variable
  Variable eliminated = Variable::w;
  int degree_bound = 0;
  double noise = 0.0;  // relative interpolation noise estimate
  double radius = 1.0;  // interpolation radius
  UnivariatePoly scaled;  // poly in the variable kept / radius, better balanced
};

/// Dense resultant in the kept variable, interpolated from Sylvester
/// determinants at degree_bound + 1 roots of unity scaled by `radius`.
/// Throws IdenticallyZeroResultant when every sample vanishes relative to its
/// Hadamard bound.
Eliminant sylvester_resultant(const BivariateLaurent& p, const BivariateLaurent& q, Variable eliminate,
                              const ResultantOptions& opts = {});
/// Same, for coefficients already held in extended precision.
Eliminant sylvester_resultant(const WideLaurent& p, const WideLaurent& q, Variable eliminate,
                              const ResultantOptions& opts = {});

}  // namespace logamoeba
