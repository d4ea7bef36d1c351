#pragma once

#include <vector>

#include "logamoeba/laurent.hpp"
#include "logamoeba/lyashko.hpp"
#include "logamoeba/projective.hpp"
#include "logamoeba/system.hpp"
#include "logamoeba/tolerances.hpp"

namespace logamoeba {

struct DiscriminantTest {
  bool discriminantal = false;
  double margin = 0.0;  // min distance of a branch value to RP^1 (infinite when there are none)
  DivisorCP1 divisor;
  std::vector<Diagnostic> warnings;
};

/// S(f) is singular iff some branch value of the Gauss map is real.
DiscriminantTest is_discriminantal(const BivariateLaurent& f, const Tolerances& tol = {});

/// Gauss map fiber over d: the vol(Delta) solutions of {f = 0, pencil_member(f, d) = 0}.
/// Throws FiberNearBranch when two solutions collide, FiberEscape when fewer
/// than vol(Delta) solutions stay in the torus.
std::vector<TorusPoint> fiber(const BivariateLaurent& f, const ProjPoint& d, const Tolerances& tol = {});

/// Points of a curve's toric compactification, compared through the monomial
/// embedding over the Newton polygon's lattice points. Punctures are at finite
/// distance, so paths through them stay continuous.
class ToricMetric {
 public:
  ToricMetric(const BivariateLaurent& f, cplx z_scale = 1.0, cplx w_scale = 1.0);

  std::vector<cplx> embed(const TorusPoint& p) const;
  /// Chordal Fubini-Study distance in [0, 1].
  double distance(const TorusPoint& p, const TorusPoint& q) const;

 private:
  std::vector<Exponent> points_;
  double log_z_scale_;
  double log_w_scale_;
};

struct FiberTrack {
  std::vector<double> direction_steps;           // angles, from theta0 to theta0 + pi
  std::vector<std::vector<TorusPoint>> fibers;   // fibers[k][i]: point i of the tracked labelling
  std::vector<int> permutation;                  // end label i sits at start index permutation[i]
  double min_separation = 0.0;                   // smallest pairwise distance seen, toric metric
};

struct MonodromyOptions {
  int steps = 720;          // nominal steps over a half turn
  double theta0 = -1.0;     // negative: a fixed offset that avoids rational directions
  double min_step = 1e-4;   // halving floor in radians
  bool keep_fibers = false;
  bool check_smooth = true;  // refuse when a branch value is real
};

struct MonodromyResult {
  int b0 = 0;
  std::vector<int> permutation;
  FiberTrack track;
  int halvings = 0;
};

/// Components of S(f) as cycles of the monodromy of the Gauss map fiber along RP^1.
/// Throws SingularCriticalLocus when a branch value is within tol.real of RP^1,
/// TrackingCollision when step halving reaches the floor.
MonodromyResult monodromy_b0(const BivariateLaurent& f, const MonodromyOptions& opts = {},
                             const Tolerances& tol = {});

/// Number of cycles of a permutation of {0..n-1}.
int cycle_count(const std::vector<int>& permutation);

}  // namespace logamoeba
