#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "logamoeba/laurent.hpp"
#include "logamoeba/lyashko.hpp"
#include "logamoeba/projective.hpp"
#include "logamoeba/system.hpp"
#include "logamoeba/tolerances.hpp"

namespace logamoeba {

enum class LineFamily { L1, L2, L3, L4, custom };

std::string to_string(LineFamily f);
/// Throws InvalidInput for unknown names.
LineFamily line_family_from_string(std::string_view s);

struct FamilyParams {
  double epsilon = 0.1;  // angles are drawn from (0, epsilon)
  double M = 10.0;       // radius bands (M, M+1) and (M^2, M^2+1)
  // Node Gauss values closer than this (chordally) to RP1 count as
  // non-generic and are redrawn. The default families are nearly
  // degenerate by design, so the default is small.
  double sign_margin = 1e-5;
};

/// The line {a z + b w = 1}.
struct LineSpec {
  cplx a = 1.0;
  cplx b = 1.0;
  LineFamily family = LineFamily::custom;
  double theta = 0.0;
  double rho = 1.0;

  /// a z + b w - 1.
  BivariateLaurent polynomial() const;

  /// Member of a family with the given parameters. For custom lines the phase is pi/4.
  static LineSpec member(LineFamily family, double theta, double rho = 1.0);
};

struct NodeRecord {
  TorusPoint p;
  ProjPoint v1;  // Gauss value of the first branch
  ProjPoint v2;  // Gauss value of the second branch
  int sigma = 0;
  int first = -1;   // component carrying the first branch
  int second = -1;  // component carrying the second branch
};

/// +1 when both values lie strictly in the same half of CP^1 minus RP^1,
/// -1 when in opposite halves, 0 when either is within tol of RP^1.
int node_sign(const ProjPoint& v1, const ProjPoint& v2, double tol);

/// Node of two lines with both Gauss values from the closed forms.
/// Throws ParallelLines or NodeOnTorusBoundary.
NodeRecord line_intersection_data(const LineSpec& first, const LineSpec& second, double tol = 1e-9);

/// Sign from the position of ab and cd relative to the line through ad and bc:
/// +1 on different sides, -1 on the same side, 0 on the line.
int half_plane_sign(cplx a, cplx b, cplx c, cplx d, double tol = 1e-12);

/// Uniform draw from a family: theta in (0, epsilon), rho in its band.
LineSpec sample_line(LineFamily family, const FamilyParams& params, std::mt19937_64& rng);

enum class ComponentKind { binomial, line, general };

struct Component {
  ComponentKind kind = ComponentKind::general;
  BivariateLaurent poly;
  ProjPoint gauss_constant;  // binomial components only
};

struct NodalCurve {
  std::vector<Component> components;
  std::vector<NodeRecord> nodes;

  int n_minus() const;
  int n_plus() const;
  int n_zero() const;
  /// Product of the component polynomials.
  BivariateLaurent polynomial() const;
};

NodalCurve nodal_curve_from_lines(const std::vector<LineSpec>& lines, const Tolerances& tol = {});

/// Components are assumed smooth in the torus; nodes are their pairwise
/// transverse intersections. Throws NotNodal for a tangency or a
/// non-primitive binomial.
NodalCurve nodal_curve_from_components(const std::vector<BivariateLaurent>& components, const Tolerances& tol = {});

/// Branching divisor of the nodal curve: (3 deg s - 2) times the Gauss value of
/// each binomial component, and for the others their own branching divisor
/// plus three times the Gauss values at their node branches.
DivisorCP1 extended_ll(const NodalCurve& curve, const Tolerances& tol = {});

/// b0 of the critical locus of a small smoothing: b0_of_components + n_minus + 2 n_plus.
/// Throws ZeroSignNode when a node has sigma = 0.
int predicted_b0(const NodalCurve& curve, int b0_of_components);

/// d lines with exactly n nodes of sign -1, re-verified pair by pair. Pairs
/// closer to parallel than epsilon / (4d) are redrawn.
/// Throws SignVerificationFailed once `retries` draws are exhausted.
std::vector<LineSpec> construct_arrangement(int d, int n, const FamilyParams& params = {}, std::uint64_t seed = 1,
                                            int retries = 2000);

/// Geometric mean of the node coordinates' moduli (1 without nodes).
double node_scale(const std::vector<LineSpec>& lines);

/// 1e-6 times the minimum pairwise node distance (the node modulus when there
/// is one node), both measured in units of node_scale.
double default_smoothing(const std::vector<LineSpec>& lines);

/// prod (a_i z + b_i w - 1) + eps * g, g a seeded real polynomial with full
/// d-simplex support and coefficients of modulus 0.5..1.5 in the coordinates
/// (z, w) / node_scale. A single line is returned unchanged.
BivariateLaurent smooth_arrangement(const std::vector<LineSpec>& lines, double eps_smooth, std::uint64_t seed = 7);

}  // namespace logamoeba
