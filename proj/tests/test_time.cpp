#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oesv/subdivision.hpp"
#include "oesv/sv_operator_1d.hpp"
#include "oesv/sv_operator_2d.hpp"
#include "oesv/time_integration.hpp"

using namespace oesv;

namespace {

double taylor(double z, int order) {
  double s = 1.0, t = 1.0;
  for (int j = 1; j <= order; ++j) {
    t *= z / j;
    s += t;
  }
  return s;
}

Eigen::VectorXd as_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<long>(v.size()));
}

}  // namespace

TEST_CASE("builtin schemes: consistency and amplification factors") {
  for (const auto& name : builtin_scheme_names()) {
    const RKScheme s = builtin_scheme(name);
    CHECK(s.row_sum_defect() < 1e-15);
    CHECK(s.stages() == s.order);
    for (double z : {-2.5, -1.0, -0.3, 0.0, 0.4, 1.0}) {
      CHECK(std::abs(s.amplification(z) - taylor(z, s.order)) < 1e-15 * std::max(1.0, std::abs(taylor(z, s.order))) * 4);
    }
  }
  CHECK(builtin_scheme("ssprk3").name == "SSPRK3");
  CHECK(scheme_for_order(2).name == "SSPRK2");
  CHECK(scheme_for_order(3).name == "SSPRK3");
  CHECK(scheme_for_order(4).name == "RK4");
  CHECK_THROWS_AS(builtin_scheme("RK45"), UnknownScheme);
}

TEST_CASE("linear RKSV step equals the Taylor polynomial of the dense operator") {
  const int N = 8, k = 1, n = k + 1;
  SvOperator1D<Advection1D> op(build_mesh_1d(0, 1, N, make_rule(k, SubdivisionFamily::Gauss)),
                               Advection1D{}, {});
  const int dof = N * n;
  // Oracle from the control-volume form: d/dt C u = R u.
  Eigen::MatrixXd C(dof, dof), R(dof, dof);
  for (int col = 0; col < dof; ++col) {
    Field e = op.make_field();
    e.data()[col] = 1.0;
    C.col(col) = as_vector(op.cv_integrals(e));
    R.col(col) = as_vector(op.residual_cv(e, 0.0));
  }
  const Eigen::MatrixXd A = C.fullPivLu().solve(R);
  std::mt19937_64 g(7);
  std::normal_distribution<double> nd;
  Field u = op.make_field();
  for (double& x : u.data()) x = nd(g);
  const double tau = 0.3 / (N * (2 * k + 1));
  for (const auto& name : builtin_scheme_names()) {
    const RKScheme s = builtin_scheme(name);
    Eigen::VectorXd expect = as_vector(u.data()), term = expect;
    for (int j = 1; j <= s.order; ++j) {
      term = (tau / j) * (A * term);
      expect += term;
    }
    Field v = u;
    step_rksv(op, v, s, tau, 0.0);
    CHECK((as_vector(v.data()) - expect).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("run lands on the final time with the CFL step count") {
  SvOperator1D<Advection1D> op(build_mesh_1d(0, 1, 512, make_rule(1, SubdivisionFamily::Gauss)),
                               Advection1D{}, {});
  Field u = op.make_field();
  for (int i = 0; i < 512; ++i) u(i, 0, 0) = std::sin(2 * M_PI * (i + 0.5) / 512);
  RunOptions opt;
  opt.cfl = 1.0 / 3.0;
  opt.t_final = 1.1;
  const auto res = run(op, u, builtin_scheme("SSPRK2"), opt);
  // tau = (1/3) / 512, 1.1 / tau = 1689.6
  CHECK(res.steps == 1690);
  CHECK(res.t == 1.1);
  opt.t_final = 0.0;
  CHECK(run(op, u, builtin_scheme("SSPRK2"), opt).steps == 0);
  opt.t_final = 1.0;
  opt.cfl = 0.0;
  CHECK_THROWS_AS(run(op, u, builtin_scheme("SSPRK2"), opt), ValidationError);
  opt.cfl = 0.2;
  opt.max_steps = 5;
  CHECK(run(op, u, builtin_scheme("SSPRK2"), opt).steps == 5);
}

TEST_CASE("OESV steps keep constants and conserve mass") {
  SvOperator2D<Euler2D> op(build_mesh_2d({0, 1, 0, 1}, 6, 6, make_rule(2, SubdivisionFamily::Gauss)),
                           Euler2D{}, {});
  Field u = op.make_field();
  for (int i = 0; i < op.num_cells(); ++i) {
    u(i, 0, 0) = 1.2;
    u(i, 1, 0) = 0.3;
    u(i, 2, 0) = -0.1;
    u(i, 3, 0) = 3.0;
  }
  Field v = u;
  step_oesv(op, v, builtin_scheme("SSPRK3"), 0.01, 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) CHECK(std::abs(v.data()[i] - u.data()[i]) < 1e-13);

  SvOperator1D<Euler1D> op1(build_mesh_1d(0, 1, 40, make_rule(2, SubdivisionFamily::Gauss)),
                            Euler1D{}, {});
  Field w = op1.make_field();
  for (int i = 0; i < 40; ++i) {
    const bool hi = i >= 10 && i < 20;
    w(i, 0, 0) = hi ? 1.0 : 0.125;
    w(i, 2, 0) = (hi ? 1.0 : 0.1) / 0.4;
  }
  std::vector<double> m0(3, 0.0), m1(3, 0.0);
  for (int i = 0; i < 40; ++i)
    for (int c = 0; c < 3; ++c) m0[c] += w(i, c, 0) / 40.0;
  RunOptions opt;
  opt.cfl = 0.2;
  opt.t_final = 0.05;
  const auto res = run(op1, w, builtin_scheme("SSPRK3"), opt);
  for (int i = 0; i < 40; ++i)
    for (int c = 0; c < 3; ++c) m1[c] += res.u(i, c, 0) / 40.0;
  for (int c = 0; c < 3; ++c) CHECK(std::abs(m1[c] - m0[c]) < 1e-13);
}

TEST_CASE("filtered step applies the damping of the final stage input") {
  // With the filter on, each stage is the unfiltered stage followed by F_tau.
  SvOperator1D<Advection1D> op(build_mesh_1d(0, 1, 16, make_rule(2, SubdivisionFamily::Gauss)),
                               Advection1D{}, {});
  std::mt19937_64 g(3);
  std::normal_distribution<double> nd;
  Field u = op.make_field();
  for (double& x : u.data()) x = nd(g);
  const double tau = 0.01;
  Field expect = u;
  Field du = op.residual(expect, 0.0);
  expect.axpy(tau, du);
  apply_filter(op, expect, tau);
  Field got = u;
  RKScheme euler{"FE", 1, {{1.0}}, {{1.0}}};
  step_oesv(op, got, euler, tau, 0.0);
  CHECK(got.data() == expect.data());
}
