#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oesv/analysis.hpp"
#include "oesv/config.hpp"
#include "oesv/driver.hpp"
#include "oesv/io.hpp"
#include "oesv/projection.hpp"
#include "oesv/subdivision.hpp"
#include "oesv/sv_operator_2d.hpp"

using namespace oesv;

namespace {

std::string temp_dir(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("oesv_test_" + name);
  std::filesystem::create_directories(p);
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exact Riemann solver: Sod and Lax star states") {
  RiemannSolver sod({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1});
  CHECK(sod.p_star() == doctest::Approx(0.30313).epsilon(1e-4));
  CHECK(sod.u_star() == doctest::Approx(0.92745).epsilon(1e-4));
  const auto far_l = sod.sample(-10.0), far_r = sod.sample(10.0);
  CHECK(far_l[0] == 1.0);
  CHECK(far_r[2] == 0.1);
  const auto range = sod.density_range();
  CHECK(range[0] == 0.125);
  CHECK(range[1] == 1.0);
  // contact: density jumps, pressure and velocity do not
  const auto a = sod.sample(sod.u_star() - 1e-9), b = sod.sample(sod.u_star() + 1e-9);
  CHECK(a[2] == doctest::Approx(b[2]));
  CHECK(a[0] > b[0]);

  RiemannSolver lax({0.445, 0.698, 3.528}, {0.5, 0.0, 0.571});
  CHECK(lax.p_star() == doctest::Approx(2.46610).epsilon(1e-4));
  CHECK(lax.u_star() == doctest::Approx(1.52872).epsilon(1e-4));
}

TEST_CASE("error norms, overshoot and residue") {
  const auto rule = make_rule(3, SubdivisionFamily::Gauss);
  const Mesh1D mesh = build_mesh_1d(0, 1, 8, rule);
  auto cubic = [](double x) { return 1.0 - 2.0 * x + 0.5 * x * x * x; };
  const Field u = l2_project(mesh, 1, scalar_function(cubic));
  const auto e = error_norms(mesh, u, 0, cubic);
  CHECK(e.l1 < 1e-13);
  CHECK(e.l2 < 1e-13);
  CHECK(e.linf < 1e-13);
  const auto e1 = error_norms(mesh, u, 0, [&](double x) { return cubic(x) + 0.5; });
  CHECK(e1.l1 == doctest::Approx(0.5));
  CHECK(e1.l2 == doctest::Approx(0.5));
  CHECK(e1.linf == doctest::Approx(0.5));

  const Mesh2D m2 = build_mesh_2d({0, 2, 0, 1}, 4, 4, make_rule(1, SubdivisionFamily::Gauss));
  const Field w = l2_project(m2, 1, scalar_function([](double x, double y) { return x + 2 * y; }));
  const auto e2 = error_norms(m2, w, 0, [](double x, double y) { return x + 2 * y - 1; });
  CHECK(e2.l1 == doctest::Approx(2.0));
  CHECK(e2.l2 == doctest::Approx(std::sqrt(2.0)));

  Field f(1, 1, 2, 1);
  f(0, 0, 0) = 1.0;
  f(0, 0, 1) = std::sqrt(3.0);  // nodal values 0 and 2
  f(1, 0, 0) = 0.5;
  const auto r = nodal_range(f, 0);
  CHECK(r[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(r[1] == doctest::Approx(2.0));
  const auto o = overshoot_metric(f, 0, 0.25, 1.5);
  CHECK(o.undershoot == doctest::Approx(0.25));
  CHECK(o.overshoot == doctest::Approx(0.5));

  Field g = f;
  g(0, 0, 0) += 0.2;
  g(1, 0, 0) -= 0.4;
  g(0, 0, 1) += 100.0;  // high modes do not enter the residue
  CHECK(average_residue(f, g, 0.5) == doctest::Approx((0.2 + 0.4) / 2.0 / 0.5));
}

TEST_CASE("convergence table rates") {
  ConvergenceTable t;
  t.add("16", 16, {1e-2, 2e-2, 4e-2});
  t.add("32", 32, {2.5e-3, 5e-3, 1e-2});
  t.add("64", 64, {3.125e-4, 6.25e-4, 1.25e-3});
  REQUIRE(t.rows().size() == 3);
  CHECK_FALSE(t.rows()[0].has_rate);
  CHECK(t.rows()[1].rate.l2 == doctest::Approx(2.0));
  CHECK(t.rows()[2].rate.l1 == doctest::Approx(3.0));
  CHECK(t.to_text().find("64") != std::string::npos);
}

TEST_CASE("config parsing: defaults, echo and diagnostics") {
  const RunConfig c = parse_config("[run]\nbenchmark = sod\n");
  CHECK(c.benchmark == "sod");
  CHECK(c.k == 2);
  CHECK(c.scheme == "SSPRK3");
  CHECK(c.cfl == doctest::Approx(0.2));
  CHECK(c.t_final == doctest::Approx(1.3));
  CHECK(c.ny == 1);
  CHECK(parse_config(echo_config(c)) == c);

  const RunConfig s = parse_config("[run]\nbenchmark = advec1d_sin2 # comment\nk = 3\n");
  CHECK(s.scheme == "RK4");
  CHECK(s.cfl == doctest::Approx(1.0 / 7.0));

  const RunConfig e = parse_config("[run]\nbenchmark = euler1d_smooth\nk = 1\n");
  CHECK(e.cfl == doctest::Approx(0.95 / 3.0));
  CHECK(e.scheme == "SSPRK2");

  const RunConfig inl = parse_config(
      "[problem]\nequation = advection2d\ndomain = 0 2 0 1\ninitial = advec2d_sin2\n"
      "velocity = 1 0.5\nbc_left = outflow\nbc_right = outflow\n[run]\nnx = 8\nny = 4\n"
      "t_final = 0.1\n[output]\ndir = /tmp\n");
  CHECK(inl.equation == "advection2d");
  CHECK(inl.domain.x1 == 2.0);
  CHECK(inl.velocity_y == 0.5);
  CHECK(parse_config(echo_config(inl)) == inl);

  CHECK_THROWS_AS(parse_config("[run]\nbenchmark = sod\nk = 0\n"), ValidationError);
  CHECK_NOTHROW(parse_config("[run]\nbenchmark = sod\nk = 0\nfilter = off\n"));
  CHECK_THROWS_AS(parse_config("[run]\nbenchmark = sod\ncfl = -1\n"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_config("[run]\nbenchmark = nope\n"), doctest::Contains("known: advec1d_sin2"), ValidationError);
  CHECK_THROWS_AS(parse_config("[run]\nbenchmark = sod\nscheme = RK9\n"), ValidationError);
  CHECK(parse_config("[run]\nbenchmark = pentagram\n").multi_index == "total");
  CHECK(parse_config("[run]\nbenchmark = pentagram\nmulti_index = MAX\n").multi_index == "max");
  CHECK_THROWS_AS(parse_config("[run]\nbenchmark = pentagram\nmulti_index = sum\n"), ValidationError);
  try {
    parse_config("[run]\nbenchmark = sod\nbogus = 1\nk 2\n[wrong]\n");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    const std::string msg = err.what();
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("line 4") != std::string::npos);
    CHECK(msg.find("line 5") != std::string::npos);
  }
  try {
    parse_config("[run]\nbenchmark = sod\n\nnx = 1\n");
    FAIL("expected ValidationError");
  } catch (const ValidationError& err) {
    CHECK(std::string(err.what()).find("line 4: key 'nx'") != std::string::npos);
  }
}

TEST_CASE("problem registry entries") {
  const auto names = benchmark_names();
  CHECK(names.size() == 14);
  for (const auto& n : names) CHECK(benchmark(n).name == n);
  CHECK_THROWS_AS(benchmark("kelvin"), UnknownBenchmark);

  const Problem sod = benchmark("sod");
  CHECK(sod.t_final == 1.3);
  CHECK(sod.paper_mesh.nx == 256);
  CHECK(sod.exact.has_value());

  const Problem sedov = benchmark("sedov");
  CHECK(sedov.paper_mesh.nx == 129);
  const Mesh1D m = build_mesh_1d(sedov.domain.x0, sedov.domain.x1, 129,
                                 make_rule(2, SubdivisionFamily::Gauss));
  const Field f = sedov.initial_field(m);
  const double h = 4.0 / 129.0;
  CHECK(f(64, 2, 0) == doctest::Approx(3200000.0 / h));
  CHECK(f(10, 2, 0) == doctest::Approx(1e-12));

  const Problem sv = benchmark("shock_vortex");
  REQUIRE(sv.vortex.has_value());
  CHECK(sv.vortex->eps == 0.3);
  CHECK(sv.vortex->alpha == 0.204);
  CHECK(sv.vortex->rc == 0.05);

  const Problem dm = benchmark("double_mach");
  CHECK(dm.domain.x1 == 4.0);
  CHECK(dm.paper_mesh.nx == 1920);
}

TEST_CASE("internal walls must lie on mesh lines") {
  const Mesh2D m = build_mesh_2d({0, 1, 0, 1}, 4, 4, make_rule(1, SubdivisionFamily::Gauss));
  CHECK_NOTHROW(SvOperator2D<Euler2D>(m, Euler2D{}, {}, {InternalWall{true, 0.5, 0.25, 0.75}}));
  CHECK_THROWS_AS(SvOperator2D<Euler2D>(m, Euler2D{}, {}, {InternalWall{true, 0.4, 0.25, 0.75}}),
                  InvalidMesh);
  CHECK_THROWS_AS(SvOperator2D<Euler2D>(m, Euler2D{}, {}, {InternalWall{false, 1.0, 0.0, 1.0}}),
                  InvalidMesh);
}

TEST_CASE("VTK writers round-trip cell averages") {
  const Mesh2D m = build_mesh_2d({-1, 1, 0, 0.5}, 5, 3, make_rule(2, SubdivisionFamily::Gauss));
  const Field u = l2_project(m, 2, [](double x, double y, std::span<double> out) {
    out[0] = x * y + 0.1;
    out[1] = std::sin(x) - y;
  });
  const std::string dir = temp_dir("vtk");
  write_vtk_averages(m, u, {"a", "b"}, dir + "/avg.vtk");
  const VtkGrid g = read_vtk(dir + "/avg.vtk");
  CHECK(g.nx == 5);
  CHECK(g.ny == 3);
  CHECK(g.x0 == doctest::Approx(-1.0));
  CHECK(g.dx == doctest::Approx(0.4));
  for (int i = 0; i < 15; ++i) {
    CHECK(g.cell_data.at("a")[i] == doctest::Approx(u(i, 0, 0)).epsilon(1e-15));
    CHECK(g.cell_data.at("b")[i] == doctest::Approx(u(i, 1, 0)).epsilon(1e-15));
  }
  write_vtk_nodal(m, u, {"a", "b"}, dir + "/nodal.vtk");
  const VtkGrid n = read_vtk(dir + "/nodal.vtk");
  CHECK(n.nx == 15);
  CHECK(n.ny == 9);
  CHECK_THROWS_AS(read_vtk(dir + "/missing.vtk"), IoError);
}

TEST_CASE("run summary records non-physical failures") {
  RunConfig cfg = benchmark_config("sod", false);
  RunOutcome o;
  o.benchmark = "sod";
  o.ok = false;
  o.error_category = "NonPhysicalState";
  o.error_message = "non-physical state";
  o.fail_cell = 17;
  o.fail_stage = 2;
  o.fail_time = 0.25;
  const auto j = nlohmann::json::parse(summary_json(cfg, o));
  CHECK(j["status"] == "failed");
  CHECK(j["error"]["cell"] == 17);
  CHECK(j["error"]["stage"] == 2);
  CHECK(j["error"]["time"] == 0.25);
  CHECK(parse_config(j["config"].get<std::string>()) == cfg);
}

TEST_CASE("driver: short Sod run writes its outputs") {
  RunConfig cfg = benchmark_config("sod", false);
  cfg.nx = 64;
  cfg.t_final = 0.2;
  cfg.out_dir = temp_dir("sod");
  cfg.prefix = "sod";
  cfg.damping = true;
  const RunOutcome o = execute(cfg);
  CHECK(o.ok);
  CHECK(o.t == 0.2);
  CHECK(o.physical);
  CHECK(o.has_exact);
  CHECK(o.errors[0].l1 < 0.1);
  // waves have not reached the ends: mass and energy are conserved
  for (int c : {0, 2}) CHECK(std::abs(o.mass_final[c] - o.mass_initial[c]) < 1e-12);
  CHECK(std::filesystem::exists(cfg.out_dir + "/sod_solution.csv"));
  CHECK(std::filesystem::exists(cfg.out_dir + "/sod_damping.csv"));
  const auto j = nlohmann::json::parse(read_file(cfg.out_dir + "/sod_summary.json"));
  CHECK(j["status"] == "ok");
  CHECK(j["steps"] == o.steps);
  REQUIRE(o.history.size() >= 2);
  const auto& last = o.history.back();
  const auto& before = o.history[o.history.size() - 2];
  if (last.tau < before.tau * (1.0 - 1e-9)) {
    CHECK(o.residue_landing == last.residue);
    CHECK(o.residue_final == before.residue);
  } else {
    CHECK(std::isnan(o.residue_landing));
    CHECK(o.residue_final == last.residue);
  }
}
