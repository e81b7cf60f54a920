#include <cmath>

#include "doctest.h"
#include "oesv/basis.hpp"
#include "oesv/errors.hpp"
#include "oesv/mesh.hpp"
#include "oesv/star_mass.hpp"
#include "oesv/subdivision.hpp"

using namespace oesv;

TEST_CASE("legendre values") {
  CHECK(legendre(0, 0.37) == 1.0);
  CHECK(legendre(1, -1.0) == -1.0);
  CHECK(legendre(2, 0.0) == doctest::Approx(-0.5));
  for (int l = 0; l <= 7; ++l) {
    CHECK(legendre(l, 1.0) == doctest::Approx(1.0));
    CHECK(legendre(l, -1.0) == doctest::Approx(l % 2 ? -1.0 : 1.0));
  }
  // P_3 = (5x^3 - 3x)/2, P_3' = (15x^2 - 3)/2, P_3'' = 15x
  const double x = 0.3;
  CHECK(legendre(3, x) == doctest::Approx(0.5 * (5 * x * x * x - 3 * x)));
  CHECK(legendre_deriv(3, x) == doctest::Approx(0.5 * (15 * x * x - 3)));
  CHECK(legendre_deriv_order(3, 2, x) == doctest::Approx(15 * x));
  CHECK(legendre_deriv_order(3, 3, x) == doctest::Approx(15.0));
  CHECK(legendre_deriv_order(3, 4, x) == doctest::Approx(0.0));
  // int_{-1}^{0.5} P_2 = [(x^3 - x)/2] = (0.125-0.5)/2 - 0
  CHECK(legendre_integral(2, -1.0, 0.5) == doctest::Approx(0.5 * (0.125 - 0.5)));
}

TEST_CASE("gauss rules") {
  auto g1 = gauss_rule(1);
  CHECK(g1.nodes[0] == doctest::Approx(0.0));
  CHECK(g1.weights[0] == doctest::Approx(2.0));
  auto g2 = gauss_rule(2);
  CHECK(g2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)));
  CHECK(g2.weights[1] == doctest::Approx(1.0));
  auto g5 = gauss_rule(5);
  double s = 0;
  for (int i = 0; i < 5; ++i) s += g5.weights[i] * std::pow(g5.nodes[i], 8);
  CHECK(s == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
  for (int n = 1; n <= 16; ++n) {
    auto g = gauss_rule(n);
    double m = 0;
    for (int i = 0; i < n; ++i) m += g.weights[i] * std::pow(g.nodes[i], 2 * n - 2);
    CHECK(m == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
  }
  CHECK_THROWS(gauss_rule(0));
  CHECK_THROWS(gauss_rule(17));
}

TEST_CASE("subdivision nodes") {
  auto n1 = subdivision_nodes(1, SubdivisionFamily::Gauss);
  REQUIRE(n1.size() == 1);
  CHECK(n1[0] == doctest::Approx(0.0));
  auto n2 = subdivision_nodes(2, SubdivisionFamily::Gauss);
  CHECK(n2[0] == doctest::Approx(-1.0 / std::sqrt(3.0)));
  CHECK(n2[1] == doctest::Approx(1.0 / std::sqrt(3.0)));
  auto c1 = subdivision_nodes(1, SubdivisionFamily::ParamC, 0.5);
  CHECK(c1[0] == doctest::Approx(-0.5));
  auto r1 = subdivision_nodes(1, SubdivisionFamily::RightRadau);
  CHECK(r1[0] == doctest::Approx(-1.0 / 3.0));
  for (int k = 1; k <= 4; ++k) {
    auto a = subdivision_nodes(k, SubdivisionFamily::ParamC, 0.0);
    auto b = subdivision_nodes(k, SubdivisionFamily::Gauss);
    for (int j = 0; j < k; ++j) CHECK(std::abs(a[j] - b[j]) < 1e-14);
  }
  CHECK_THROWS_AS(subdivision_nodes(2, SubdivisionFamily::ParamC, 1.5), NonDistinctRoots);
}

TEST_CASE("quadrature weights") {
  auto r1 = make_rule(1, SubdivisionFamily::Gauss);
  CHECK(r1.weights[0] == 0.0);
  CHECK(r1.weights[1] == doctest::Approx(2.0));
  CHECK(r1.weights[2] == doctest::Approx(0.0));
  auto r2 = make_rule(2, SubdivisionFamily::Gauss);
  CHECK(r2.weights[1] == doctest::Approx(1.0));
  CHECK(r2.weights[2] == doctest::Approx(1.0));
  CHECK(r2.weights[3] == doctest::Approx(0.0).epsilon(1e-14));
  auto rr = make_rule(1, SubdivisionFamily::RightRadau);
  CHECK(rr.weights[1] == doctest::Approx(1.5));
  CHECK(rr.weights[2] == doctest::Approx(0.5));
  std::vector<double> bad{-1.0, -0.2, 0.4, 1.0};
  CHECK_THROWS_AS(quadrature_weights(2, bad), ExactnessViolation);
  for (int k = 1; k <= 3; ++k) {
    for (auto fam : {SubdivisionFamily::Gauss, SubdivisionFamily::RightRadau}) {
      auto r = make_rule(k, fam);
      CHECK(r.upwind());
      CHECK(r.exactness_residual(2 * k - 1) < 1e-12);
      CHECK(r.positivity_margin() > 0.0);
      for (int a = 0; a <= 2 * k - 1; ++a) {
        for (int b = 0; a + b <= 2 * k - 1; ++b) {
          const double q = r.apply([&](double x) { return legendre(a, x) * legendre(b, x); });
          CHECK(std::abs(q - (a == b ? 2.0 / (2 * a + 1) : 0.0)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("mesh") {
  auto r1 = make_rule(1, SubdivisionFamily::Gauss);
  auto m = build_mesh_1d(0, 1, 4, r1);
  CHECK(m.edges()[1] == doctest::Approx(0.25));
  CHECK(m.subdivision_point(0, 1) == doctest::Approx(0.125));
  auto r2 = make_rule(2, SubdivisionFamily::Gauss);
  auto m2 = build_mesh_1d(0, 2 * M_PI, 8, r2);
  const double h = 2 * M_PI / 8;
  CHECK(m2.subdivision_point(3, 2) - m2.center(3) == doctest::Approx(h / (2 * std::sqrt(3.0))));
  CHECK_THROWS_AS(build_mesh_1d(0, 1, 4, r1, 0.5), InvalidMesh);
  auto p = build_mesh_1d(0, 1, 16, r1, 0.3, 7);
  for (int i = 0; i < 16; ++i) CHECK(p.h(i) > 0);
  auto q = build_mesh_2d({0, 4, 0, 1}, 8, 2, r2);
  CHECK(q.hx() == doctest::Approx(0.5));
  CHECK(q.cvs_per_cell() == 9);
  double sum = 0;
  for (int jy = 0; jy < 3; ++jy)
    for (int jx = 0; jx < 3; ++jx) sum += q.cv_measure(jx, jy);
  CHECK(std::abs(sum - 0.25) < 1e-14);
  CHECK(build_mesh_2d({0, 1, 0, 1}, 320, 320, r2).num_cells() == 102400);
}

TEST_CASE("star mass matrix") {
  auto r1 = make_rule(1, SubdivisionFamily::Gauss);
  std::vector<double> v{0.0, 1.0};
  auto cv = mstar_apply(v, r1, 2.0);
  CHECK(cv[0] == doctest::Approx(-1.0));
  CHECK(cv[1] == doctest::Approx(1.0));
  StarMassMatrix g1(r1);
  auto G = g1.matrix(2.0);
  CHECK(G(0, 0) == doctest::Approx(2.0));
  CHECK(G(1, 1) == doctest::Approx(1.0));
  CHECK(std::abs(G(0, 1)) < 1e-14);
  for (int k = 1; k <= 3; ++k) {
    for (auto fam : {SubdivisionFamily::Gauss, SubdivisionFamily::RightRadau}) {
      auto r = make_rule(k, fam);
      StarMassMatrix s(r);
      const double h = 0.37;
      auto M = s.matrix(h);
      for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b) {
          CHECK(std::abs(M(a, b) - M(b, a)) < 1e-13 * h);
          if (std::min(a, b) <= k - 1) {
            CHECK(std::abs(M(a, b) - (a == b ? h / (2 * a + 1) : 0.0)) < 1e-13);
          }
        }
      const double q = r.apply([&](double x) { return legendre(k + 1, x) * legendre(k - 1, x); });
      const double gkk = (2.0 * k - 1) / (2.0 * k + 1) * (2.0 / (2 * k - 1) - q);
      CHECK(M(k, k) == doctest::Approx(0.5 * h * gkk));
      CHECK(s.min_eigenvalue_reference() > 0);
    }
  }
  auto r0 = make_rule(0, SubdivisionFamily::Gauss);
  std::vector<double> c0{3.5};
  CHECK(mstar_apply(c0, r0, 1.0)[0] == doctest::Approx(3.5));
}
