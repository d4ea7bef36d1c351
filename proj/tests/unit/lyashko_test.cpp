#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "logamoeba/error.hpp"
#include "logamoeba/lyashko.hpp"

using namespace logamoeba;
using testing::poly;

namespace {

// Closed-form LL quartic of 1 + z + w + alpha zw - alpha z^2, coefficients of u^k v^(4-k).
BinaryForm closed_form_quartic(cplx a) {
  return {{4.0 * a * a + 4.0 - 8.0 * a, -8.0 * a * a + 12.0 + 28.0 * a, 47.0 * a + 14.0, 34.0 * a + 8.0 * a * a + 8.0,
           -4.0 * a * a + 7.0 * a + 2.0}};
}

DivisorCP1 divisor_of(std::initializer_list<std::pair<ProjPoint, int>> entries) {
  DivisorCP1 D;
  for (const auto& [p, m] : entries) D.add(p, m, 1e-12);
  return D;
}

}  // namespace

TEST_CASE("LL of the quadric family") {
  const DivisorCP1 D = ll_divisor(testing::quadric(4.0));
  CHECK(D.degree() == 2);
  CHECK(divisor_distance(D, divisor_of({{ProjPoint(3.0, 1.0), 1}, {ProjPoint(1.0, 3.0), 1}})) < 1e-9);
  const DivisorCP1 E = ll_divisor(testing::quadric(-1.0));
  CHECK(divisor_distance(E, divisor_of({{ProjPoint(cplx(0, 1), 1.0), 1}, {ProjPoint(cplx(0, -1), 1.0), 1}})) < 1e-9);
  CHECK(ll_divisor(poly({{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}})).empty());
  try {
    ll_divisor(poly({{{1, 1}, 1.0}, {{0, 0}, -5.0}}));
    FAIL("expected IdenticallyZeroResultant");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdenticallyZeroResultant);
  }
}

TEST_CASE("binary form of the quadric at alpha = 4 is (u - 3v)(3u - v)") {
  const BinaryForm F = ll_binary_form(testing::quadric(4.0));
  CHECK(projective_coefficient_distance(F, BinaryForm{{3.0, -10.0, 3.0}}) < 1e-9);
}

TEST_CASE("LL quartic in closed form") {
  for (const cplx alpha : {cplx(0, 1), cplx(1, 1), cplx(2, 3), cplx(-1, 2)}) {
    const BinaryForm F = ll_binary_form(testing::quartic_family(alpha));
    CHECK(F.degree() == 4);
    CHECK(projective_coefficient_distance(F, closed_form_quartic(alpha)) <= 1e-6);
  }
}

TEST_CASE("binary form and divisor encode the same points") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    DivisorCP1 D;
    for (int k = 0; k < 5; ++k) D.add(ProjPoint({g(rng), g(rng)}, {g(rng), g(rng)}), 1 + k % 2, 1e-9);
    D.add(ProjPoint(1.0, 0.0), 1, 1e-9);
    const DivisorCP1 back = binary_form(D).divisor();
    CHECK(back.degree() == D.degree());
    CHECK(divisor_distance(back, D) < 1e-4);  // double roots are only ~sqrt(eps) accurate
  }
}

TEST_CASE("divisor distance") {
  const DivisorCP1 D = divisor_of({{ProjPoint(cplx(0, 1), 1.0), 1}, {ProjPoint(cplx(0, -1), 1.0), 1}});
  const DivisorCP1 E = divisor_of({{ProjPoint(cplx(0, -1), 1.0), 1}, {ProjPoint(cplx(0, 1), 1.0), 1}});
  CHECK(divisor_distance(D, D) == 0.0);
  CHECK(divisor_distance(D, E) < 1e-15);
  const DivisorCP1 A = divisor_of({{ProjPoint(0.0, 1.0), 1}, {ProjPoint(1.0, 1.0), 1}});
  const DivisorCP1 B = divisor_of({{ProjPoint(0.0, 1.0), 1}, {ProjPoint(1.0, 0.0), 1}});
  // |1*0 - 1*1| / (sqrt 2 * 1)
  CHECK(divisor_distance(A, B) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  try {
    divisor_distance(A, divisor_of({{ProjPoint(0.0, 1.0), 3}}));
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeMismatch);
  }
}

TEST_CASE("hungarian matches brute force") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<double> cost(n * n);
    for (auto& c : cost) c = u(rng);
    const std::vector<int> a = hungarian(cost, n);
    double got = 0.0;
    for (int i = 0; i < n; ++i) got += cost[i * n + a[i]];
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = 1e300;
    do {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += cost[i * n + perm[i]];
      best = std::min(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(got == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("LL is invariant under toric translation") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  const BivariateLaurent f = testing::quartic_family(cplx(-1, 2));
  const DivisorCP1 D = ll_divisor(f);
  for (int trial = 0; trial < 5; ++trial) {
    const cplx lambda = std::polar(std::exp(0.7 * g(rng)), g(rng)), mu = std::polar(std::exp(0.7 * g(rng)), g(rng));
    CHECK(divisor_distance(D, ll_divisor(f.toric_translate(lambda, mu))) <= 1e-6);
  }
}

TEST_CASE("real coefficients give a conjugation-closed divisor") {
  const BivariateLaurent f = poly({{{0, 0}, 2.0}, {{1, 0}, -1.0}, {{0, 1}, 3.0}, {{1, 1}, 0.5}, {{2, 0}, -1.5}, {{0, 2}, 1.0}});
  const DivisorCP1 D = ll_divisor(f);
  CHECK(divisor_distance(D, D.conj(1e-6)) <= 1e-6);
}
