#pragma once

#include <optional>
#include <vector>

#include "logamoeba/error.hpp"
#include "logamoeba/laurent.hpp"
#include "logamoeba/resultant.hpp"
#include "logamoeba/tolerances.hpp"

namespace logamoeba {

struct TorusPoint {
  cplx z;
  cplx w;
};

struct SystemSolution {
  cplx z;
  cplx w;
  int multiplicity = 1;
  double residual = 0.0;  // max relative residual of the two equations
};

struct SystemResult {
  std::vector<SystemSolution> solutions;
  Variable eliminated = Variable::w;
  int eliminant_degree = 0;
  std::vector<Diagnostic> warnings;

  int total_multiplicity() const;
};

/// Solves {p = 0, q = 0} in (C*)^2: Sylvester elimination of the variable with
/// the smaller matrix (the other one on IdenticallyZeroResultant), univariate
/// back-substitution, Newton polishing. Solutions with a vanishing or
/// escaping coordinate are discarded. Multiplicities come from the eliminant's
/// root clusters; ambiguous splits are reported in `warnings`. With `only`
/// set, that variable is eliminated and no fallback is tried.
SystemResult solve_torus_system(const BivariateLaurent& p, const BivariateLaurent& q, const Tolerances& tol,
                                std::optional<Variable> only = std::nullopt);
/// Same, with extended-precision coefficients (elimination, back-substitution
/// and polishing all run in extended precision).
SystemResult solve_torus_system(const WideLaurent& p, const WideLaurent& q, const Tolerances& tol,
                                std::optional<Variable> only = std::nullopt);

}  // namespace logamoeba
