#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "logamoeba/error.hpp"
#include "logamoeba/resultant.hpp"
#include "logamoeba/system.hpp"
#include "logamoeba/univariate.hpp"
#include "oracles.hpp"

using namespace logamoeba;
using testing::poly;

namespace {

// Roots of the eliminant up to a common scale: compares monic coefficient vectors.
bool proportional(const UnivariatePoly& p, const std::vector<cplx>& expected, double tol) {
  if (p.degree() != static_cast<int>(expected.size()) - 1) return false;
  const cplx s = p.leading() / expected.back();
  for (int k = 0; k <= p.degree(); ++k)
    if (std::abs(p[k] - s * expected[k]) > tol * std::abs(s)) return false;
  return true;
}

std::vector<cplx> random_coefficients(int deg, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> c(deg + 1);
  for (auto& x : c) x = {g(rng), g(rng)};
  return c;
}

}  // namespace

TEST_CASE("log derivatives") {
  const BivariateLaurent m = BivariateLaurent::monomial({3, -2}, 2.0);
  CHECK(m.log_dz() == BivariateLaurent::monomial({3, -2}, 6.0));
  CHECK(m.log_dw() == BivariateLaurent::monomial({3, -2}, -4.0));
  const cplx alpha(0.3, 2.0);
  const BivariateLaurent f = testing::quadric(alpha);
  CHECK(f.log_dz() == poly({{{1, 0}, 1.0}, {{1, 1}, alpha}}));
  CHECK(f.log_dw() == poly({{{0, 1}, 1.0}, {{1, 1}, alpha}}));
  CHECK(std::abs(poly({{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}}).eval(-2.0, 1.0)) == 0.0);
}

TEST_CASE("evaluation at the torus boundary") {
  const BivariateLaurent f = poly({{{-1, 0}, 1.0}, {{0, 1}, 1.0}});
  try {
    f.eval(0.0, 1.0);
    FAIL("expected EvalAtTorusBoundary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EvalAtTorusBoundary);
  }
  CHECK(std::abs(poly({{{2, 0}, 1.0}}).eval(0.0, 3.0)) == 0.0);
}

TEST_CASE("product rule for log derivatives on random samples") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    BivariateLaurent f, h;
    for (int k = 0; k < 5; ++k) {
      f.add_term({int(rng() % 5) - 2, int(rng() % 5) - 2}, {g(rng), g(rng)});
      h.add_term({int(rng() % 5) - 2, int(rng() % 5) - 2}, {g(rng), g(rng)});
    }
    const BivariateLaurent lhs = (f * h).log_dz(), rhs = f.log_dz() * h + f * h.log_dz();
    const cplx z(g(rng), g(rng)), w(g(rng), g(rng));
    CHECK(std::abs(lhs.eval(z, w) - rhs.eval(z, w)) <= 1e-10 * (1 + lhs.magnitude(z, w)));
  }
}

TEST_CASE("roots: small examples") {
  SUBCASE("z^2 + 1") {
    const RootSet r = roots(UnivariatePoly({1.0, 0.0, 1.0}));
    REQUIRE(r.roots.size() == 2);
    for (const auto& x : r.roots) {
      CHECK(x.multiplicity == 1);
      CHECK(std::min(std::abs(x.value - cplx(0, 1)), std::abs(x.value - cplx(0, -1))) < 1e-14);
    }
  }
  SUBCASE("2t^2 + 2t + 1") {
    const RootSet r = roots(UnivariatePoly({1.0, 2.0, 2.0}));
    REQUIRE(r.roots.size() == 2);
    for (const auto& x : r.roots)
      CHECK(std::min(std::abs(x.value - cplx(-0.5, 0.5)), std::abs(x.value - cplx(-0.5, -0.5))) < 1e-14);
  }
  SUBCASE("(z - 1)^3") {
    const RootSet r = roots(UnivariatePoly({-1.0, 3.0, -3.0, 1.0}));
    REQUIRE(r.roots.size() == 1);
    CHECK(r.roots[0].multiplicity == 3);
    CHECK(std::abs(r.roots[0].value - 1.0) < 1e-5);
  }
  SUBCASE("roots at the origin") {
    const RootSet r = roots(UnivariatePoly({0.0, 0.0, -4.0, 1.0}));
    CHECK(r.total_multiplicity() == 3);
  }
  CHECK_THROWS_AS(roots(UnivariatePoly({2.0})), Error);
}

TEST_CASE("roots agree with companion eigenvalues") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int deg = 1 + trial % 25;
    const std::vector<cplx> c = random_coefficients(deg, rng);
    const UnivariatePoly p(c);
    const RootSet r = roots(p);
    CHECK(r.converged);
    CHECK(r.total_multiplicity() == deg);
    const std::vector<cplx> ref = testing::companion_roots(c);
    for (const auto& x : r.roots) {
      CHECK(testing::nearest(ref, x.value) <= 1e-8 * std::max(1.0, std::abs(x.value)));
      const double bound = p.norm1() * std::pow(std::max(1.0, std::abs(x.value)), deg);
      CHECK(std::abs(p(x.value)) <= 1e-9 * bound);
    }
  }
}

TEST_CASE("multiplicities from known factorizations") {
  const std::vector<cplx> rts = {cplx(1, 1), cplx(1, 1), cplx(-2, 0.5), cplx(0.3, 0), cplx(0.3, 0), cplx(0.3, 0)};
  const RootSet r = roots(UnivariatePoly::from_roots(rts));
  CHECK(r.total_multiplicity() == 6);
  for (const auto& x : r.roots) {
    if (std::abs(x.value - cplx(1, 1)) < 1e-3) CHECK(x.multiplicity == 2);
    else if (std::abs(x.value - 0.3) < 1e-3) CHECK(x.multiplicity == 3);
    else CHECK(x.multiplicity == 1);
  }
}

TEST_CASE("Sylvester resultant: hand examples") {
  SUBCASE("Res_w(w - z, w - 1) = z - 1") {
    const Eliminant e = sylvester_resultant(poly({{{0, 1}, 1.0}, {{1, 0}, -1.0}}),
                                            poly({{{0, 1}, 1.0}, {{0, 0}, -1.0}}), Variable::w);
    CHECK(proportional(e.poly, {-1.0, 1.0}, 1e-12));
  }
  SUBCASE("Res_w(zw - 1, w + z) = z^2 + 1") {
    const Eliminant e = sylvester_resultant(poly({{{1, 1}, 1.0}, {{0, 0}, -1.0}}),
                                            poly({{{0, 1}, 1.0}, {{1, 0}, 1.0}}), Variable::w);
    CHECK(proportional(e.poly, {1.0, 0.0, 1.0}, 1e-12));
  }
  SUBCASE("common factor") {
    const BivariateLaurent g = poly({{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{0, 0}, 1.0}});
    const BivariateLaurent p = g * poly({{{1, 0}, 2.0}, {{0, 1}, -1.0}}), q = g * poly({{{0, 0}, 3.0}, {{1, 1}, 1.0}});
    try {
      sylvester_resultant(p, q, Variable::w);
      FAIL("expected IdenticallyZeroResultant");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IdenticallyZeroResultant);
    }
  }
}

TEST_CASE("resultant matches the Sylvester determinant by definition and Poisson's formula") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    BivariateLaurent p, q;
    const int dp = 1 + trial % 3, dq = 1 + (trial / 3) % 3;
    for (int i = 0; i <= dp; ++i)
      for (int j = 0; i + j <= dp; ++j) p.add_term({i, j}, {g(rng), g(rng)});
    for (int i = 0; i <= dq; ++i)
      for (int j = 0; i + j <= dq; ++j) q.add_term({i, j}, {g(rng), g(rng)});
    const Eliminant e = sylvester_resultant(p, q, Variable::w);
    for (int s = 0; s < 3; ++s) {
      const cplx z(g(rng), g(rng));
      const std::vector<cplx> ps = slice(p, Variable::w, z), qs = slice(q, Variable::w, z);
      const cplx det = testing::sylvester_by_definition(ps, qs);
      // Poisson: Res = lc(p)^deg q * prod q(z, w_i) over roots of p(z, .)
      cplx poisson = std::pow(ps.back(), double(qs.size() - 1));
      for (cplx wi : testing::companion_roots(ps)) {
        cplx v = 0.0;
        for (int k = int(qs.size()) - 1; k >= 0; --k) v = v * wi + qs[k];
        poisson *= v;
      }
      const double scale = std::abs(det) + 1e-300;
      CHECK(std::abs(e.poly(z) - det) <= 1e-8 * std::max(scale, 1.0));
      CHECK(std::abs(poisson - det) <= 1e-8 * std::max(scale, 1.0));
      CHECK(std::abs(sylvester_determinant(p, q, Variable::w, z) - det) <= 1e-10 * std::max(scale, 1.0));
    }
    // swapping the arguments changes at most the sign
    const Eliminant swapped = sylvester_resultant(q, p, Variable::w);
    const cplx z(0.4, -0.7);
    const cplx a = e.poly(z), b = swapped.poly(z);
    CHECK(std::min(std::abs(a - b), std::abs(a + b)) <= 1e-8 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("torus system: two points and a discarded boundary solution") {
  // z + w = 3, z w = 2
  const SystemResult r = solve_torus_system(poly({{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{0, 0}, -3.0}}),
                                            poly({{{1, 1}, 1.0}, {{0, 0}, -2.0}}), Tolerances{});
  REQUIRE(r.solutions.size() == 2);
  for (const auto& s : r.solutions) {
    CHECK(std::abs(s.z + s.w - 3.0) < 1e-12);
    CHECK(std::abs(s.z * s.w - 2.0) < 1e-12);
  }
  // z (w - 1) = 0, w = z + 1: the solution z = 0 is off the torus
  const SystemResult t = solve_torus_system(poly({{{1, 1}, 1.0}, {{1, 0}, -1.0}}),
                                            poly({{{0, 1}, 1.0}, {{1, 0}, -1.0}, {{0, 0}, -1.0}}), Tolerances{});
  REQUIRE(t.solutions.size() == 0);
}

TEST_CASE("torus system agrees with companion back-substitution on random conics") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 15; ++trial) {
    BivariateLaurent p, q;
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; i + j <= 2; ++j) {
        p.add_term({i, j}, {g(rng), g(rng)});
        q.add_term({i, j}, {g(rng), g(rng)});
      }
    const SystemResult r = solve_torus_system(p, q, Tolerances{});
    CHECK(r.total_multiplicity() == 4);  // Bezout
    for (const auto& s : r.solutions) {
      CHECK(p.relative_residual(s.z, s.w) <= 1e-9);
      CHECK(q.relative_residual(s.z, s.w) <= 1e-9);
    }
  }
}
