#include <Eigen/Dense>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "logamoeba/critlocus.hpp"
#include "logamoeba/error.hpp"
#include "logamoeba/lattice.hpp"
#include "logamoeba/nodal.hpp"

using namespace logamoeba;
using testing::poly;

namespace {

// Node by a linear solve and branch values [a z : b w] straight from the definition.
struct DirectNode {
  cplx z, w;
  ProjPoint v1, v2;
};

DirectNode direct(const LineSpec& L, const LineSpec& K) {
  Eigen::Matrix2cd A;
  A << L.a, L.b, K.a, K.b;
  const Eigen::Vector2cd p = A.partialPivLu().solve(Eigen::Vector2cd(1.0, 1.0));
  return {p(0), p(1), ProjPoint(L.a * p(0), L.b * p(1)), ProjPoint(K.a * p(0), K.b * p(1))};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

LineSpec line(cplx a, cplx b) {
  LineSpec L;
  L.a = a;
  L.b = b;
  return L;
}

}  // namespace

TEST_CASE("node of (1,2) and (2,1)") {
  const NodeRecord n = line_intersection_data(line(1.0, 2.0), line(2.0, 1.0));
  CHECK(std::abs(n.p.z - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(n.p.w - 1.0 / 3.0) < 1e-15);
  CHECK(chordal_distance(n.v1, ProjPoint(1.0, 2.0)) < 1e-15);
  CHECK(chordal_distance(n.v2, ProjPoint(2.0, 1.0)) < 1e-15);
  CHECK(n.sigma == 0);
}

TEST_CASE("family examples") {
  const LineSpec l1 = LineSpec::member(LineFamily::L1, 0.1);
  CHECK(code_of([&] { line_intersection_data(l1, LineSpec::member(LineFamily::L2, 0.1)); }) ==
        ErrorCode::ParallelLines);
  CHECK(line_intersection_data(l1, LineSpec::member(LineFamily::L2, 0.05)).sigma == -1);
  const LineSpec l4 = LineSpec::member(LineFamily::L4, 0.03, 100.5);
  CHECK(line_intersection_data(l1, l4).sigma == -1);
  CHECK(code_of([] { line_intersection_data(line(1.0, 0.5), line(1.0, 2.0)); }) == ErrorCode::NodeOnTorusBoundary);
}

TEST_CASE("closed forms agree with the direct computation and the half-plane rule") {
  std::mt19937_64 rng(19);
  std::normal_distribution<double> g;
  int nonzero = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const LineSpec L = line({g(rng), g(rng)}, {g(rng), g(rng)}), K = line({g(rng), g(rng)}, {g(rng), g(rng)});
    const NodeRecord n = line_intersection_data(L, K);
    const DirectNode d = direct(L, K);
    CHECK(std::abs(n.p.z - d.z) <= 1e-9 * std::abs(d.z));
    CHECK(std::abs(n.p.w - d.w) <= 1e-9 * std::abs(d.w));
    CHECK(chordal_distance(n.v1, d.v1) < 1e-9);
    CHECK(chordal_distance(n.v2, d.v2) < 1e-9);
    CHECK(n.sigma == node_sign(d.v1, d.v2, 1e-9));
    CHECK(n.sigma == half_plane_sign(L.a, L.b, K.a, K.b));
    nonzero += n.sigma != 0;
  }
  CHECK(nonzero == 500);
}

TEST_CASE("node sign is invariant under a common toric translation") {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    const LineSpec L = line({g(rng), g(rng)}, {g(rng), g(rng)}), K = line({g(rng), g(rng)}, {g(rng), g(rng)});
    const cplx s(g(rng), g(rng));
    // (z, w) -> (s z, s w) sends {a z + b w = 1} to {(a/s) z + (b/s) w = 1}
    CHECK(line_intersection_data(L, K).sigma == line_intersection_data(line(L.a / s, L.b / s), line(K.a / s, K.b / s)).sigma);
  }
}

TEST_CASE("sign matrix cells fixed by the chord geometry") {
  // Pairs with phases 0 and pi/2 are always -1; equal phases with radii in the
  // same band are -1; L1 x L3 and L2 x L4 are +1.
  const int expected[4][4] = {{-1, -1, 1, -1}, {-1, -1, -1, 1}, {1, -1, 0, -1}, {-1, 1, -1, 0}};
  const LineFamily fam[4] = {LineFamily::L1, LineFamily::L2, LineFamily::L3, LineFamily::L4};
  const FamilyParams params{0.1, 10.0};
  std::mt19937_64 rng(1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int s = 0; s < 20; ++s) {
        const LineSpec L = sample_line(fam[i], params, rng), K = sample_line(fam[j], params, rng);
        const NodeRecord n = line_intersection_data(L, K);
        const DirectNode d = direct(L, K);
        CHECK(n.sigma == node_sign(d.v1, d.v2, 1e-9));
        if (expected[i][j] != 0) CHECK(n.sigma == expected[i][j]);
      }
}

TEST_CASE("extended LL of the nodal quartic") {
  for (const cplx alpha : {cplx(2.0), cplx(1, 1)}) {
    const BivariateLaurent binom = poly({{{1, 0}, alpha}, {{0, 0}, 1.0}});
    const BivariateLaurent rest = poly({{{0, 0}, 1.0}, {{1, 0}, 1.0 - alpha}, {{0, 1}, 1.0}});
    const NodalCurve C = nodal_curve_from_components({binom, rest});
    REQUIRE(C.nodes.size() == 1);
    const DivisorCP1 D = extended_ll(C);
    DivisorCP1 expected;
    expected.add(ProjPoint(1.0, 0.0), 1, 1e-9);
    expected.add(ProjPoint(1.0 - alpha, 2.0 * alpha - 1.0), 3, 1e-9);
    CHECK(divisor_distance(D, expected) <= 1e-6);
  }
}

TEST_CASE("extended LL of generic lines has degree 3 d (d - 1)") {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g;
  for (int d = 2; d <= 5; ++d) {
    std::vector<LineSpec> lines;
    for (int i = 0; i < d; ++i) lines.push_back(line({g(rng), g(rng)}, {g(rng), g(rng)}));
    const NodalCurve C = nodal_curve_from_lines(lines);
    CHECK(C.nodes.size() == std::size_t(d * (d - 1) / 2));
    const DivisorCP1 D = extended_ll(C);
    CHECK(D.degree() == 3 * d * (d - 1));
    CHECK(D.degree() == branching_degree(testing::simplex(d)));
  }
}

TEST_CASE("binomial component with one node contributes once") {
  // z w = 2 meets the line z + w = 3 at (1, 2) and (2, 1): two nodes, so 3 * 2 - 2 = 4
  const NodalCurve C = nodal_curve_from_components(
      {poly({{{1, 1}, 1.0}, {{0, 0}, -2.0}}), poly({{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{0, 0}, -3.0}})});
  REQUIRE(C.nodes.size() == 2);
  const DivisorCP1 D = extended_ll(C);
  int on_constant = 0;
  for (const auto& e : D.entries())
    if (chordal_distance(e.point, ProjPoint(1.0, 1.0)) < 1e-9) on_constant = e.multiplicity;
  CHECK(on_constant == 4);
  // one node on the binomial 2z + 1 gives multiplicity 1 at its Gauss value
  const NodalCurve E =
      nodal_curve_from_components({poly({{{1, 0}, 2.0}, {{0, 0}, 1.0}}), poly({{{0, 0}, 1.0}, {{1, 0}, -1.0}, {{0, 1}, 1.0}})});
  const DivisorCP1 F = extended_ll(E);
  for (const auto& e : F.entries())
    if (chordal_distance(e.point, ProjPoint(1.0, 0.0)) < 1e-9) CHECK(e.multiplicity == 1);
}

TEST_CASE("predicted b0") {
  std::mt19937_64 rng(2);
  NodalCurve C;
  C.nodes.resize(1);
  C.nodes[0].sigma = -1;
  CHECK(predicted_b0(C, 2) == 3);
  for (auto& n : C.nodes) n.sigma = 1;
  CHECK(predicted_b0(C, 2) == 4);
  C.nodes[0].sigma = 0;
  CHECK(code_of([&] { predicted_b0(C, 2); }) == ErrorCode::ZeroSignNode);
  for (int d = 2; d <= 4; ++d) {
    NodalCurve all_plus, all_minus;
    all_plus.nodes.resize(d * (d - 1) / 2);
    all_minus.nodes.resize(d * (d - 1) / 2);
    for (auto& n : all_plus.nodes) n.sigma = 1;
    for (auto& n : all_minus.nodes) n.sigma = -1;
    CHECK(predicted_b0(all_plus, d) == d * d);
    CHECK(predicted_b0(all_minus, d) == d + d * (d - 1) / 2);
  }
}

TEST_CASE("construct_arrangement hits every count") {
  for (int d = 1; d <= 4; ++d)
    for (int n = 0; n <= d * (d - 1) / 2; ++n) {
      const auto lines = construct_arrangement(d, n, FamilyParams{}, 3);
      REQUIRE(lines.size() == std::size_t(d));
      const NodalCurve C = nodal_curve_from_lines(lines);
      CHECK(C.n_minus() == n);
      CHECK(C.n_plus() == d * (d - 1) / 2 - n);
      CHECK(C.n_zero() == 0);
      CHECK(predicted_b0(C, d) == d + d * (d - 1) - n);
    }
  const auto lines = construct_arrangement(3, 1, FamilyParams{}, 1);
  int l1 = 0, l3 = 0;
  for (const auto& L : lines) {
    l1 += L.family == LineFamily::L1;
    l3 += L.family == LineFamily::L3;
  }
  CHECK(l1 == 2);
  CHECK(l3 == 1);
  CHECK(code_of([] { construct_arrangement(3, 4); }) == ErrorCode::InvalidInput);
}

TEST_CASE("smoothing") {
  const LineSpec L = line(2.0, cplx(0, 1));
  CHECK(smooth_arrangement({L}, 0.1) == L.polynomial());
  const auto lines = construct_arrangement(2, 1, FamilyParams{1.0, 2.0, 0.3}, 1);
  const BivariateLaurent h = smooth_arrangement(lines, default_smoothing(lines));
  CHECK(newton_polygon(h).all_points.size() == 6);
  CHECK(monodromy_b0(h).b0 == 3);
}
