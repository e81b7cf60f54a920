#include "oesv/problems.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "oesv/analysis.hpp"
#include "oesv/errors.hpp"

namespace oesv {

std::string to_string(EquationKind kind) {
  switch (kind) {
    case EquationKind::Advection1D: return "advection1d";
    case EquationKind::Euler1D: return "euler1d";
    case EquationKind::Advection2D: return "advection2d";
    case EquationKind::Euler2D: return "euler2d";
  }
  return "?";
}

EquationKind parse_equation_kind(const std::string& name) {
  if (name == "advection1d") return EquationKind::Advection1D;
  if (name == "euler1d") return EquationKind::Euler1D;
  if (name == "advection2d") return EquationKind::Advection2D;
  if (name == "euler2d") return EquationKind::Euler2D;
  throw ValidationError("unknown equation '" + name +
                        "' (expected advection1d, euler1d, advection2d, euler2d)");
}

int num_components(EquationKind k) {
  switch (k) {
    case EquationKind::Advection1D:
    case EquationKind::Advection2D: return 1;
    case EquationKind::Euler1D: return 3;
    case EquationKind::Euler2D: return 4;
  }
  return 1;
}

std::string Problem::default_scheme(int degree) const {
  if (!smooth) return "SSPRK3";
  if (degree + 1 <= 2) return "SSPRK2";
  if (degree + 1 == 3) return "SSPRK3";
  return "RK4";
}

Field Problem::initial_field(const Mesh1D& mesh) const {
  const Function2D f = initial;
  Field u = l2_project(
      mesh, num_comp(), [&f](double x, std::span<double> out) { f(x, 0.0, out); }, init_points);
  if (center_energy > 0.0) {
    const int mid = mesh.num_cells() / 2;
    const double e = center_cell_energy(mesh.h(mid));
    for (int l = 0; l <= mesh.k(); ++l) u(mid, 2, l) = 0.0;
    u(mid, 2, 0) = e;
  }
  return u;
}

Field Problem::initial_field(const Mesh2D& mesh) const {
  return l2_project(mesh, num_comp(), initial, init_points);
}

namespace {

using State3 = std::array<double, 3>;
using State4 = std::array<double, 4>;

State3 cons1(double g, double rho, double v, double p) {
  return {rho, rho * v, p / (g - 1.0) + 0.5 * rho * v * v};
}
State4 cons2(double g, double rho, double vx, double vy, double p) {
  return {rho, rho * vx, rho * vy, p / (g - 1.0) + 0.5 * rho * (vx * vx + vy * vy)};
}
void put(std::span<double> out, const State3& s) {
  for (int i = 0; i < 3; ++i) out[i] = s[i];
}
void put(std::span<double> out, const State4& s) {
  for (int i = 0; i < 4; ++i) out[i] = s[i];
}

Problem riemann(const std::string& name, State3 l, State3 r, const std::string& desc) {
  Problem p;
  p.name = name;
  p.description = desc;
  p.equation = EquationKind::Euler1D;
  p.domain = {-5.0, 5.0, 0.0, 0.0};
  p.k = 2;
  p.paper_mesh = p.desk_mesh = {256, 1};
  p.t_final = 1.3;
  const double g = p.gamma;
  p.initial = [=](double x, double, std::span<double> out) {
    put(out, x < 0.0 ? cons1(g, l[0], l[1], l[2]) : cons1(g, r[0], r[1], r[2]));
  };
  p.init_points = 8;
  p.exact = [=](double x, double, double t, std::span<double> out) {
    const RiemannSolver rs(l, r, g);
    const auto w = t > 0.0 ? rs.sample(x / t) : (x < 0.0 ? l : r);
    put(out, cons1(g, w[0], w[1], w[2]));
  };
  p.bc1 = {BoundaryCondition::outflow(), BoundaryCondition::outflow()};
  const auto range = RiemannSolver(l, r, g).density_range();
  p.watch_lo = range[0];
  p.watch_hi = range[1];
  return p;
}

Problem make(const std::string& name) {
  const double pi = std::numbers::pi;
  Problem p;
  p.name = name;
  if (name == "advec1d_sin2") {
    p.description = "1D linear advection of sin^2(2 pi x), periodic";
    p.equation = EquationKind::Advection1D;
    p.domain = {0.0, 1.0, 0.0, 0.0};
    p.k = 2;
    p.paper_mesh = {1024, 1};
    p.desk_mesh = {256, 1};
    p.t_final = 1.1;
    p.smooth = true;
    p.initial = [pi](double x, double, std::span<double> out) {
      out[0] = std::pow(std::sin(2 * pi * x), 2);
    };
    p.exact = [pi](double x, double, double t, std::span<double> out) {
      out[0] = std::pow(std::sin(2 * pi * (x - t)), 2);
    };
    p.watch_lo = 0.0;
    p.watch_hi = 1.0;
    return p;
  }
  if (name == "euler1d_smooth") {
    p.description = "1D Euler density wave rho = 2 + 2 sin^2(x - t), v = 1, p = 2";
    p.equation = EquationKind::Euler1D;
    p.domain = {0.0, 2 * pi, 0.0, 0.0};
    p.k = 2;
    p.paper_mesh = {1024, 1};
    p.desk_mesh = {256, 1};
    p.t_final = 1.1;
    p.cfl_factor = 0.95;
    p.smooth = true;
    const double g = p.gamma;
    auto sol = [g](double x, double t, std::span<double> out) {
      put(out, cons1(g, 2.0 + 2.0 * std::pow(std::sin(x - t), 2), 1.0, 2.0));
    };
    p.initial = [sol](double x, double, std::span<double> out) { sol(x, 0.0, out); };
    p.exact = [sol](double x, double, double t, std::span<double> out) { sol(x, t, out); };
    p.watch_lo = 2.0;
    p.watch_hi = 4.0;
    return p;
  }
  if (name == "sod") {
    return riemann(name, {1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, "Sod shock tube on [-5, 5]");
  }
  if (name == "lax") {
    return riemann(name, {0.445, 0.698, 3.528}, {0.5, 0.0, 0.571}, "Lax shock tube on [-5, 5]");
  }
  if (name == "blast_wc") {
    p.description = "Woodward-Colella interacting blast waves, reflective walls";
    p.equation = EquationKind::Euler1D;
    p.domain = {0.0, 1.0, 0.0, 0.0};
    p.k = 2;
    p.paper_mesh = p.desk_mesh = {640, 1};
    p.t_final = 0.038;
    const double g = p.gamma;
    p.initial = [g](double x, double, std::span<double> out) {
      const double pr = x < 0.1 ? 1e3 : (x < 0.9 ? 1e-2 : 1e2);
      put(out, cons1(g, 1.0, 0.0, pr));
    };
    p.init_points = 8;
    p.bc1 = {BoundaryCondition::reflective(), BoundaryCondition::reflective()};
    p.watch_lo = p.watch_hi = std::nan("");
    return p;
  }
  if (name == "sedov") {
    p.description = "Sedov blast on [-2, 2], centre cell energy 3200000/h";
    p.equation = EquationKind::Euler1D;
    p.domain = {-2.0, 2.0, 0.0, 0.0};
    p.k = 2;
    p.paper_mesh = p.desk_mesh = {129, 1};
    p.t_final = 0.001;
    p.initial = [](double, double, std::span<double> out) {
      out[0] = 1.0;
      out[1] = 0.0;
      out[2] = 1e-12;
    };
    p.center_energy = 3200000.0;
    p.bc1 = {BoundaryCondition::outflow(), BoundaryCondition::outflow()};
    p.watch_lo = p.watch_hi = std::nan("");
    return p;
  }
  if (name == "advec2d_sin2") {
    p.description = "2D linear advection of sin^2(pi (x + y)) on [0,2]^2, periodic";
    p.equation = EquationKind::Advection2D;
    p.domain = {0.0, 2.0, 0.0, 2.0};
    p.k = 2;
    p.paper_mesh = {320, 256};
    p.desk_mesh = {160, 128};
    p.t_final = 1.1;
    p.smooth = true;
    p.initial = [pi](double x, double y, std::span<double> out) {
      out[0] = std::pow(std::sin(pi * (x + y)), 2);
    };
    p.exact = [pi](double x, double y, double t, std::span<double> out) {
      out[0] = std::pow(std::sin(pi * (x + y - 2.0 * t)), 2);
    };
    p.watch_lo = 0.0;
    p.watch_hi = 1.0;
    return p;
  }
  if (name == "pentagram") {
    p.description = "2D advection of a pentagram-shaped indicator, periodic on [-1, 1]^2";
    p.equation = EquationKind::Advection2D;
    p.domain = {-1.0, 1.0, -1.0, 1.0};
    p.k = 2;
    p.paper_mesh = {320, 320};
    p.desk_mesh = {80, 80};
    p.t_final = 1.8;
    p.initial = [pi](double x, double y, std::span<double> out) {
      const double r = std::hypot(x, y);
      double theta = 0.0;
      if (r > 0.0) {
        theta = std::acos(std::clamp(x / r, -1.0, 1.0));
        if (y < 0.0) theta = 2 * pi - theta;
      }
      out[0] = r <= (3.0 + std::pow(3.0, std::sin(5.0 * theta))) / 8.0 ? 1.0 : 0.0;
    };
    p.init_points = 8;
    p.watch_lo = 0.0;
    p.watch_hi = 1.0;
    return p;
  }
  if (name == "euler2d_smooth") {
    p.description = "2D Euler sine wave rho = 1 + 0.2 sin(pi (x + y - t)), v = (0.7, 0.3), p = 1";
    p.equation = EquationKind::Euler2D;
    p.domain = {0.0, 2.0, 0.0, 2.0};
    p.k = 2;
    p.paper_mesh = {320, 320};
    p.desk_mesh = {80, 80};
    p.t_final = 2.0;
    p.smooth = true;
    const double g = p.gamma;
    auto sol = [g, pi](double x, double y, double t, std::span<double> out) {
      put(out, cons2(g, 1.0 + 0.2 * std::sin(pi * (x + y - t)), 0.7, 0.3, 1.0));
    };
    p.initial = [sol](double x, double y, std::span<double> out) { sol(x, y, 0.0, out); };
    p.exact = sol;
    p.watch_lo = 0.8;
    p.watch_hi = 1.2;
    return p;
  }
  if (name == "double_mach") {
    p.description = "Double Mach reflection of a Mach 10 shock on [0, 4] x [0, 1]";
    p.equation = EquationKind::Euler2D;
    p.domain = {0.0, 4.0, 0.0, 1.0};
    p.k = 2;
    p.paper_mesh = {1920, 480};
    p.desk_mesh = {480, 120};
    p.t_final = 0.2;
    const double g = p.gamma;
    const auto post = double_mach::postshock(), pre = double_mach::preshock();
    const State4 up = cons2(g, post[0], post[1], post[2], post[3]);
    const State4 ur = cons2(g, pre[0], pre[1], pre[2], pre[3]);
    p.initial = [up, ur](double x, double y, std::span<double> out) {
      put(out, x < double_mach::kShockFootX + y / std::sqrt(3.0) ? up : ur);
    };
    p.init_points = 8;
    p.bc2 = {BoundaryCondition::inflow_state(up), BoundaryCondition::outflow(),
             BoundaryCondition::double_mach_bottom(), BoundaryCondition::double_mach_top()};
    p.watch_lo = 1.4;
    p.watch_hi = std::nan("");
    return p;
  }
  if (name == "jet_m2000") {
    p.description = "Mach 2000 jet, gamma = 5/3, on [0, 1] x [-0.25, 0.25]";
    p.equation = EquationKind::Euler2D;
    p.gamma = 5.0 / 3.0;
    p.domain = {0.0, 1.0, -0.25, 0.25};
    p.k = 2;
    p.paper_mesh = {320, 160};
    p.desk_mesh = {80, 40};
    p.t_final = 0.001;
    const double g = p.gamma;
    const State4 amb = cons2(g, 0.5, 0.0, 0.0, 0.4127);
    const State4 jet = cons2(g, 5.0, 800.0, 0.0, 0.4127);
    p.initial = [amb](double, double, std::span<double> out) { put(out, amb); };
    p.bc2 = {BoundaryCondition::inflow_function(
                 [jet](double, double y, double, std::span<double> out) {
                   if (std::abs(y) > 0.05) return false;
                   put(out, jet);
                   return true;
                 }),
             BoundaryCondition::outflow(), BoundaryCondition::outflow(),
             BoundaryCondition::outflow()};
    p.watch_lo = p.watch_hi = std::nan("");
    return p;
  }
  if (name == "shock_reflection") {
    p.description = "Steady oblique shock reflection on [0, 4] x [0, 1]";
    p.equation = EquationKind::Euler2D;
    p.domain = {0.0, 4.0, 0.0, 1.0};
    p.k = 2;
    p.paper_mesh = {200, 50};
    p.desk_mesh = {100, 25};
    p.t_final = 20.0;
    p.steady = true;
    const double g = p.gamma;
    const State4 in = cons2(g, 1.0, 2.9, 0.0, 5.0 / 7.0);
    const State4 top = cons2(g, 1.69997, 2.61934, -0.50632, 1.52819);
    p.initial = [in](double, double, std::span<double> out) { put(out, in); };
    p.bc2 = {BoundaryCondition::inflow_state(in), BoundaryCondition::outflow(),
             BoundaryCondition::reflective(), BoundaryCondition::inflow_state(top)};
    p.watch_lo = p.watch_hi = std::nan("");
    return p;
  }
  if (name == "supersonic_plates") {
    p.description = "Mach 3 flow past two plates at 15 degrees attack on [0, 10] x [-5, 5]";
    p.equation = EquationKind::Euler2D;
    p.domain = {0.0, 10.0, -5.0, 5.0};
    p.k = 2;
    p.paper_mesh = {200, 200};
    p.desk_mesh = {100, 100};
    p.t_final = 100.0;
    p.steady = true;
    const double g = p.gamma;
    const State4 in = cons2(g, 1.0, std::cos(pi / 12), std::sin(pi / 12), 1.0 / (g * 9.0));
    p.initial = [in](double, double, std::span<double> out) { put(out, in); };
    p.bc2 = {BoundaryCondition::inflow_state(in), BoundaryCondition::outflow(),
             BoundaryCondition::inflow_state(in), BoundaryCondition::outflow()};
    p.walls = {{true, 2.0, 2.0, 3.0}, {true, -2.0, 2.0, 3.0}};
    p.watch_lo = p.watch_hi = std::nan("");
    return p;
  }
  if (name == "shock_vortex") {
    p.description = "Isentropic vortex crossing a stationary Mach 1.1 shock on [0, 2] x [0, 1]";
    p.equation = EquationKind::Euler2D;
    p.domain = {0.0, 2.0, 0.0, 1.0};
    p.k = 2;
    p.paper_mesh = {400, 200};
    p.desk_mesh = {100, 50};
    p.t_final = 0.8;
    const double g = p.gamma;
    const double m = 1.1, u1 = m * std::sqrt(g);
    const double r21 = (g + 1) * m * m / ((g - 1) * m * m + 2);
    const double p2 = 1.0 + 2 * g / (g + 1) * (m * m - 1);
    const State4 left = cons2(g, 1.0, u1, 0.0, 1.0);
    const State4 right = cons2(g, r21, u1 / r21, 0.0, p2);
    p.vortex = Problem::Vortex{0.3, 0.204, 0.05, 0.25, 0.5};
    const double eps = p.vortex->eps, alpha = p.vortex->alpha, rc = p.vortex->rc;
    const double xc = p.vortex->x, yc = p.vortex->y;
    p.initial = [=](double x, double y, std::span<double> out) {
      if (x >= 0.5) {
        put(out, right);
        return;
      }
      const double xb = x - xc, yb = y - yc;
      const double eta2 = (xb * xb + yb * yb) / (rc * rc);
      const double e = std::exp(alpha * (1 - eta2));
      const double vx = u1 + eps / rc * e * yb, vy = -eps / rc * e * xb;
      const double temp = 1.0 - (g - 1) * eps * eps / (4 * alpha * g) * e * e;
      // T = p / rho and entropy p / rho^gamma = 1 are kept from the mean flow.
      const double rho = std::pow(temp, 1.0 / (g - 1));
      put(out, cons2(g, rho, vx, vy, rho * temp));
    };
    p.init_points = 6;
    p.bc2 = {BoundaryCondition::inflow_state(left), BoundaryCondition::outflow(),
             BoundaryCondition::reflective(), BoundaryCondition::reflective()};
    p.watch_lo = p.watch_hi = std::nan("");
    return p;
  }
  std::ostringstream os;
  os << "unknown benchmark '" << name << "'; known:";
  for (const auto& n : benchmark_names()) os << ' ' << n;
  throw UnknownBenchmark(os.str());
}

}  // namespace

Problem benchmark(const std::string& name) { return make(name); }

std::vector<std::string> benchmark_names() {
  return {"advec1d_sin2",   "euler1d_smooth", "sod",          "lax",
          "blast_wc",       "sedov",          "advec2d_sin2", "pentagram",
          "euler2d_smooth", "double_mach",    "jet_m2000",    "shock_reflection",
          "supersonic_plates", "shock_vortex"};
}

Function2D named_initial_condition(const std::string& name, EquationKind eq, double gamma) {
  if (name == "constant") {
    return [eq, gamma](double, double, std::span<double> out) {
      switch (eq) {
        case EquationKind::Advection1D:
        case EquationKind::Advection2D: out[0] = 1.0; break;
        case EquationKind::Euler1D: put(out, cons1(gamma, 1.0, 0.0, 1.0)); break;
        case EquationKind::Euler2D: put(out, cons2(gamma, 1.0, 0.0, 0.0, 1.0)); break;
      }
    };
  }
  Problem p = benchmark(name);
  if (p.equation != eq) {
    throw ValidationError("initial condition '" + name + "' belongs to equation " +
                          to_string(p.equation) + ", not " + to_string(eq));
  }
  return p.initial;
}

}  // namespace oesv
