#include <algorithm>
#include <cfloat>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oesv/oe_filter.hpp"
#include "oesv/subdivision.hpp"
#include "oesv/sv_operator_1d.hpp"
#include "oesv/sv_operator_2d.hpp"

using namespace oesv;

namespace {

SvOperator1D<Advection1D> two_cell_op(double beta = 1.0) {
  return SvOperator1D<Advection1D>(build_mesh_1d(0, 2, 2, make_rule(1, SubdivisionFamily::Gauss)),
                                   Advection1D{beta}, {});
}

Field random_field(int dim, int k, int cells, int comps, std::uint64_t seed) {
  Field f(dim, k, cells, comps);
  std::mt19937_64 g(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  for (double& x : f.data()) x = n(g);
  return f;
}

// Positive Euler state near (rho, m, E) = (5, 1, 50) with small modal noise.
Field random_euler_1d(int k, int cells, std::uint64_t seed) {
  Field f(1, k, cells, 3);
  std::mt19937_64 g(seed);
  std::normal_distribution<double> n(0.0, 0.1);
  const double base[3] = {5.0, 1.0, 50.0};
  for (int i = 0; i < cells; ++i)
    for (int c = 0; c < 3; ++c)
      for (int m = 0; m <= k; ++m) f(i, c, m) = (m == 0 ? base[c] : 0.0) + n(g);
  return f;
}

bool bit_equal(const Field& a, const Field& b) { return a.data() == b.data(); }

// Bitwise equality except for values that were subnormal before or after
// scaling by lam, where power-of-two scaling itself rounds.
bool equal_up_to_subnormals(const Field& a, const Field& b, double lam) {
  const double slack = std::max(1.0, std::abs(lam)) * DBL_MIN;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = a.data()[i], y = b.data()[i];
    if (x != y && std::abs(x - y) > slack) return false;
  }
  return a.size() == b.size();
}

}  // namespace

TEST_CASE("sigma and delta on a two-cell hand example") {
  auto op = two_cell_op();
  Field u = op.make_field();
  u(1, 0, 0) = 1.0;
  const auto rep = damping_report(op, u, 0.1);
  CHECK(rep.avg[0] == doctest::Approx(0.5));
  CHECK(rep.norm[0] == doctest::Approx(0.5));
  // jump 1 on each face; coefficient 1/2, norm 1/2 -> sigma^0 = 1
  CHECK(rep.sigma_at(1, 0, 0) == doctest::Approx(1.0));
  CHECK(rep.sigma_at(1, 1, 0) == doctest::Approx(1.0));
  CHECK(rep.sigma_at(1, 0, 1) == 0.0);
  CHECK(rep.delta_at(1, 0) == doctest::Approx(2.0));
  CHECK(rep.exponent_at(1, 1) == doctest::Approx(0.2));
}

TEST_CASE("single linear mode is damped by the hand exponent") {
  auto op = two_cell_op();
  Field u = op.make_field();
  u(1, 0, 0) = 1.0;
  u(1, 0, 1) = 0.5;
  // Gauss nodes +-1/sqrt(3): max |u - 1/2| = 1/2 + 1/(2 sqrt 3)
  const double norm = 0.5 + 0.5 / std::sqrt(3.0);
  const double tau = 0.03;
  const auto rep = damping_report(op, u, tau);
  CHECK(rep.norm[0] == doctest::Approx(norm).epsilon(1e-14));
  // face jumps 0.5 and 1.5 in u, 1 and 1 in u'
  CHECK(rep.delta_at(1, 0) == doctest::Approx(1.0 / norm).epsilon(1e-14));
  CHECK(rep.delta_at(1, 1) == doctest::Approx(3.0 / norm).epsilon(1e-14));
  Field v = filtered(op, u, tau);
  CHECK(v(1, 0, 0) == u(1, 0, 0));
  CHECK(v(1, 0, 1) / u(1, 0, 1) == doctest::Approx(std::exp(-4.0 * tau / norm)).epsilon(1e-14));
}

TEST_CASE("large damping exponent removes all high modes") {
  auto op = two_cell_op();
  Field u = op.make_field();
  u(1, 0, 0) = 1.0;
  u(1, 0, 1) = 0.5;
  const double norm = 0.5 + 0.5 / std::sqrt(3.0);
  const double tau = 50.0 * norm / 4.0;
  Field v = filtered(op, u, tau);
  CHECK(std::abs(v(1, 0, 1)) < 1e-20 * std::abs(u(1, 0, 1)));
  CHECK(v(1, 0, 0) == 1.0);
}

TEST_CASE("zero wave speed and uniform states give zero damping") {
  auto op = two_cell_op(0.0);
  Field u = op.make_field();
  u(1, 0, 0) = 1.0;
  u(1, 0, 1) = 0.5;
  const auto rep = damping_report(op, u, 1.0);
  for (double d : rep.delta) CHECK(d == 0.0);
  CHECK(bit_equal(filtered(op, u, 1.0), u));

  SvOperator1D<Euler1D> eop(build_mesh_1d(0, 1, 8, make_rule(2, SubdivisionFamily::Gauss)),
                            Euler1D{}, {});
  Field e = eop.make_field();
  for (int i = 0; i < 8; ++i) {
    e(i, 0, 0) = 1.0;
    e(i, 1, 0) = 0.3;
    e(i, 2, 0) = 2.5;
  }
  const auto erep = damping_report(eop, e, 1.0);
  for (double d : erep.delta) CHECK(d == 0.0);
}

TEST_CASE("filter preserves cell averages exactly") {
  SvOperator1D<Advection1D> op1(build_mesh_1d(0, 1, 32, make_rule(3, SubdivisionFamily::Gauss)),
                                Advection1D{}, {});
  SvOperator2D<Advection2D> op2(
      build_mesh_2d({0, 1, 0, 1}, 8, 8, make_rule(2, SubdivisionFamily::Gauss)), Advection2D{}, {});
  SvOperator1D<Euler1D> ope(build_mesh_1d(0, 1, 32, make_rule(2, SubdivisionFamily::Gauss)),
                            Euler1D{}, {});
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Field a = random_field(1, 3, 32, 1, s);
    const Field b = random_field(2, 2, 64, 1, s);
    const Field e = random_euler_1d(2, 32, s);
    const Field fa = filtered(op1, a, 0.05);
    const Field fb = filtered(op2, b, 0.05);
    const Field fe = filtered(ope, e, 0.01);
    for (int i = 0; i < 32; ++i) CHECK(fa(i, 0, 0) == a(i, 0, 0));
    for (int i = 0; i < 64; ++i) CHECK(fb(i, 0, 0) == b(i, 0, 0));
    for (int i = 0; i < 32; ++i)
      for (int c = 0; c < 3; ++c) CHECK(fe(i, c, 0) == e(i, c, 0));
  }
}

TEST_CASE("filter commutes with scaling and is invariant under shifts") {
  SvOperator1D<Advection1D> op(build_mesh_1d(0, 1, 16, make_rule(2, SubdivisionFamily::Gauss)),
                               Advection1D{}, {});
  SvOperator2D<Advection2D> op2(
      build_mesh_2d({0, 1, 0, 2}, 6, 5, make_rule(2, SubdivisionFamily::Gauss)), Advection2D{0.5, -1},
      {});
  SvOperator1D<Euler1D> ope(build_mesh_1d(0, 1, 16, make_rule(2, SubdivisionFamily::Gauss)),
                            Euler1D{}, {});
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Field u = random_field(1, 2, 16, 1, s);
    const Field w = random_field(2, 2, 30, 1, s);
    const Field e = random_euler_1d(2, 16, s);
    for (double lam : {0.25, 8.0, -2.0, 1024.0}) {
      Field su = u, sw = w, se = e;
      su *= lam;
      sw *= lam;
      Field fu = filtered(op, u, 0.1), fw = filtered(op2, w, 0.1);
      fu *= lam;
      fw *= lam;
      CHECK(equal_up_to_subnormals(filtered(op, su, 0.1), fu, lam));
      CHECK(equal_up_to_subnormals(filtered(op2, sw, 0.1), fw, lam));
      if (lam > 0) {
        se *= lam;
        Field fe = filtered(ope, e, 0.01);
        fe *= lam;
        CHECK(equal_up_to_subnormals(filtered(ope, se, 0.01), fe, lam));
      }
    }
    for (double lam : {0.3, 7.1, -1.7}) {
      Field su = u;
      su *= lam;
      Field fu = filtered(op, u, 0.1);
      const Field fs = filtered(op, su, 0.1);
      for (std::size_t i = 0; i < fu.size(); ++i)
        CHECK(std::abs(fs.data()[i] - lam * fu.data()[i]) <= 1e-14 * std::abs(lam) * 10.0);
    }
    // u + const: jumps and u - avg are unchanged, so high modes are identical.
    Field shifted = u;
    for (int i = 0; i < 16; ++i) shifted(i, 0, 0) += 0.75;
    const Field f0 = filtered(op, u, 0.1), f1 = filtered(op, shifted, 0.1);
    for (int i = 0; i < 16; ++i)
      for (int m = 1; m <= 2; ++m) CHECK(f1(i, 0, m) == doctest::Approx(f0(i, 0, m)).epsilon(1e-13));
  }
}

TEST_CASE("continuous fields are left bit-identical") {
  // u = 3/4 - 5/8 x on dyadic meshes: all jumps vanish in exact arithmetic.
  const Boundaries1D out1{BoundaryCondition::outflow(), BoundaryCondition::outflow()};
  for (int k = 1; k <= 3; ++k) {
    SvOperator1D<Advection1D> op(build_mesh_1d(0, 1, 16, make_rule(k, SubdivisionFamily::Gauss)),
                                 Advection1D{}, out1);
    Field u = op.make_field();
    for (int i = 0; i < 16; ++i) {
      const double xc = (i + 0.5) / 16.0;
      u(i, 0, 0) = 0.75 - 0.625 * xc;
      u(i, 0, 1) = -0.625 / 32.0;
    }
    const auto rep = damping_report(op, u, 1.0);
    for (double d : rep.delta) CHECK(d == 0.0);
    CHECK(bit_equal(filtered(op, u, 1.0), u));
  }
  Boundaries2D out2;
  out2.left = out2.right = out2.bottom = out2.top = BoundaryCondition::outflow();
  SvOperator2D<Advection2D> op2(
      build_mesh_2d({0, 1, 0, 1}, 8, 4, make_rule(2, SubdivisionFamily::Gauss)), Advection2D{},
      out2);
  Field w = op2.make_field();
  const int n = 3;
  for (int iy = 0; iy < 4; ++iy)
    for (int ix = 0; ix < 8; ++ix) {
      const int cell = op2.mesh().index(ix, iy);
      w(cell, 0, 0) = 0.5 + 0.25 * (ix + 0.5) / 8.0 - 0.5 * (iy + 0.5) / 4.0;
      w(cell, 0, 1) = 0.25 / 16.0;
      w(cell, 0, n) = -0.5 / 8.0;
    }
  CHECK(bit_equal(filtered(op2, w, 1.0), w));
}

TEST_CASE("2D damping reduces to the 1D value for x-only data") {
  auto op1 = two_cell_op();
  Field u = op1.make_field();
  u(1, 0, 0) = 1.0;
  u(1, 0, 1) = 0.5;
  SvOperator2D<Advection2D> op2(
      build_mesh_2d({0, 2, 0, 1}, 2, 3, make_rule(1, SubdivisionFamily::Gauss)), Advection2D{1.0, 0.7},
      {});
  Field w = op2.make_field();
  for (int iy = 0; iy < 3; ++iy) {
    w(op2.mesh().index(1, iy), 0, 0) = 1.0;
    w(op2.mesh().index(1, iy), 0, 1) = 0.5;
  }
  const auto r1 = damping_report(op1, u, 0.02);
  const auto r2 = damping_report(op2, w, 0.02);
  for (int iy = 0; iy < 3; ++iy) {
    const int cell = op2.mesh().index(1, iy);
    CHECK(r2.exponent_at(cell, 1) == doctest::Approx(r1.exponent_at(1, 1)).epsilon(1e-14));
    CHECK(r2.sigma_at(cell, 2, 0) == 0.0);
    CHECK(r2.sigma_at(cell, 3, 1) == 0.0);
  }
}

TEST_CASE("filter rejects k = 0") {
  SvOperator1D<Advection1D> op(build_mesh_1d(0, 1, 4, make_rule(0, SubdivisionFamily::Gauss)),
                               Advection1D{}, {});
  Field u = op.make_field();
  CHECK_THROWS_AS(damping_report(op, u, 0.1), ValidationError);
}

TEST_CASE("2D derivative order selects the mixed-derivative jump terms") {
  // Q1 on [0,2]x[0,2], column 1 holds only u = +-c xi eta; hand values:
  // jumps of u, u_x, u_y, u_xy on the x-faces average |c|, 2|c|, 2|c|, 4|c|
  // and ||u||_inf = |c| / 3 on the Gauss nodes.
  SvOperator2D<Advection2D> op(
      build_mesh_2d({0, 2, 0, 2}, 2, 2, make_rule(1, SubdivisionFamily::Gauss)), Advection2D{}, {});
  Field u = op.make_field();
  u(op.mesh().index(1, 0), 0, 3) = 0.3;
  u(op.mesh().index(1, 1), 0, 3) = -0.3;
  CHECK(op.multi_index() == MultiIndexOrder::Total);
  const auto total = damping_report(op, u, 0.1);
  op.set_multi_index(MultiIndexOrder::Max);
  const auto max = damping_report(op, u, 0.1);
  for (int f = 0; f < 2; ++f) {
    CHECK(total.sigma_at(1, f, 0) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(total.sigma_at(1, f, 1) == doctest::Approx(18.0).epsilon(1e-14));
    CHECK(max.sigma_at(1, f, 1) == doctest::Approx(36.0).epsilon(1e-14));
  }
}
