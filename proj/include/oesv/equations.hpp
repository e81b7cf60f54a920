#ifndef OESV_EQUATIONS_HPP_
#define OESV_EQUATIONS_HPP_

#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "oesv/errors.hpp"

namespace oesv {

// Equation models. Each model exposes
//   dim, n_comp, State, Normal
//   flux(u, d)                 physical flux in direction d
//   normal_flux(u, n)          f(u) . n
//   normal_speed(u, n)         spectral radius of the normal flux Jacobian
//   numerical_flux(um, up, n)  interface flux, n pointing from um to up
//   check(u)                   throws NonPhysicalState for unusable states
//   reflect(u, n)              mirror state for slip walls

/// u_t + beta u_x = 0 with the upwind flux. `downwind` flips the trace choice
/// and exists only as a negative control for the energy tests.
struct Advection1D {
  static constexpr int dim = 1;
  static constexpr int n_comp = 1;
  using State = std::array<double, 1>;
  using Normal = std::array<double, 1>;

  double beta = 1.0;
  bool downwind = false;

  static std::string name() { return "advection1d"; }
  State flux(const State& u, int) const { return {beta * u[0]}; }
  State normal_flux(const State& u, const Normal& n) const { return {beta * n[0] * u[0]}; }
  double normal_speed(const State&, const Normal& n) const { return std::abs(beta * n[0]); }
  double max_speed(const State&, int) const { return std::abs(beta); }
  State numerical_flux(const State& um, const State& up, const Normal& n) const {
    const double bn = beta * n[0];
    const bool take_minus = (bn >= 0.0) != downwind;
    return {bn * (take_minus ? um[0] : up[0])};
  }
  void check(const State&) const {}
  State reflect(const State& u, const Normal&) const { return u; }
};

/// u_t + bx u_x + by u_y = 0 with the upwind flux.
struct Advection2D {
  static constexpr int dim = 2;
  static constexpr int n_comp = 1;
  using State = std::array<double, 1>;
  using Normal = std::array<double, 2>;

  double bx = 1.0, by = 1.0;

  static std::string name() { return "advection2d"; }
  State flux(const State& u, int d) const { return {(d == 0 ? bx : by) * u[0]}; }
  State normal_flux(const State& u, const Normal& n) const {
    return {(bx * n[0] + by * n[1]) * u[0]};
  }
  double normal_speed(const State&, const Normal& n) const {
    return std::abs(bx * n[0] + by * n[1]);
  }
  double max_speed(const State&, int d) const { return std::abs(d == 0 ? bx : by); }
  State numerical_flux(const State& um, const State& up, const Normal& n) const {
    const double bn = bx * n[0] + by * n[1];
    return {bn * (bn >= 0.0 ? um[0] : up[0])};
  }
  void check(const State&) const {}
  State reflect(const State& u, const Normal&) const { return u; }
};

namespace detail {
[[noreturn]] inline void throw_nonphysical(double rho, double p) {
  std::ostringstream os;
  os.precision(17);
  os << "non-physical state: rho = " << rho << ", p = " << p;
  throw NonPhysicalState(os.str());
}
}  // namespace detail

/// 1D compressible Euler, u = (rho, rho v, E), E = p/(gamma-1) + rho v^2 / 2.
/// Interfaces use the local Lax-Friedrichs flux.
struct Euler1D {
  static constexpr int dim = 1;
  static constexpr int n_comp = 3;
  using State = std::array<double, 3>;
  using Normal = std::array<double, 1>;

  double gamma = 1.4;

  static std::string name() { return "euler1d"; }

  double pressure(const State& u) const {
    return (gamma - 1.0) * (u[2] - 0.5 * u[1] * u[1] / u[0]);
  }
  void check(const State& u) const {
    const double p = pressure(u);
    if (!(u[0] > 0.0) || !(p > 0.0)) detail::throw_nonphysical(u[0], p);
  }
  double sound_speed(const State& u) const { return std::sqrt(gamma * pressure(u) / u[0]); }

  /// (rho, v, p) -> conserved
  State from_primitive(double rho, double v, double p) const {
    return {rho, rho * v, p / (gamma - 1.0) + 0.5 * rho * v * v};
  }
  /// conserved -> (rho, v, p)
  State to_primitive(const State& u) const { return {u[0], u[1] / u[0], pressure(u)}; }

  State flux(const State& u, int) const {
    const double v = u[1] / u[0];
    const double p = pressure(u);
    return {u[1], u[1] * v + p, (u[2] + p) * v};
  }
  State normal_flux(const State& u, const Normal& n) const {
    State f = flux(u, 0);
    for (double& x : f) x *= n[0];
    return f;
  }
  double normal_speed(const State& u, const Normal& n) const {
    return std::abs(u[1] / u[0] * n[0]) + sound_speed(u) * std::abs(n[0]);
  }
  double max_speed(const State& u, int) const {
    return std::abs(u[1] / u[0]) + sound_speed(u);
  }
  State numerical_flux(const State& um, const State& up, const Normal& n) const {
    check(um);
    check(up);
    const State fm = normal_flux(um, n), fp = normal_flux(up, n);
    const double alpha = std::max(normal_speed(um, n), normal_speed(up, n));
    State out;
    for (int c = 0; c < n_comp; ++c) out[c] = 0.5 * (fm[c] + fp[c]) - 0.5 * alpha * (up[c] - um[c]);
    return out;
  }
  State reflect(const State& u, const Normal&) const { return {u[0], -u[1], u[2]}; }
};

/// 2D compressible Euler, u = (rho, rho vx, rho vy, E).
struct Euler2D {
  static constexpr int dim = 2;
  static constexpr int n_comp = 4;
  using State = std::array<double, 4>;
  using Normal = std::array<double, 2>;

  double gamma = 1.4;

  static std::string name() { return "euler2d"; }

  double pressure(const State& u) const {
    return (gamma - 1.0) * (u[3] - 0.5 * (u[1] * u[1] + u[2] * u[2]) / u[0]);
  }
  void check(const State& u) const {
    const double p = pressure(u);
    if (!(u[0] > 0.0) || !(p > 0.0)) detail::throw_nonphysical(u[0], p);
  }
  double sound_speed(const State& u) const { return std::sqrt(gamma * pressure(u) / u[0]); }

  /// (rho, vx, vy, p) -> conserved
  State from_primitive(double rho, double vx, double vy, double p) const {
    return {rho, rho * vx, rho * vy, p / (gamma - 1.0) + 0.5 * rho * (vx * vx + vy * vy)};
  }
  /// conserved -> (rho, vx, vy, p)
  State to_primitive(const State& u) const {
    return {u[0], u[1] / u[0], u[2] / u[0], pressure(u)};
  }

  State flux(const State& u, int d) const {
    const double vx = u[1] / u[0], vy = u[2] / u[0];
    const double p = pressure(u);
    if (d == 0) return {u[1], u[1] * vx + p, u[2] * vx, (u[3] + p) * vx};
    return {u[2], u[1] * vy, u[2] * vy + p, (u[3] + p) * vy};
  }
  State normal_flux(const State& u, const Normal& n) const {
    const double vn = (u[1] * n[0] + u[2] * n[1]) / u[0];
    const double p = pressure(u);
    return {u[0] * vn, u[1] * vn + p * n[0], u[2] * vn + p * n[1], (u[3] + p) * vn};
  }
  double normal_speed(const State& u, const Normal& n) const {
    const double vn = (u[1] * n[0] + u[2] * n[1]) / u[0];
    return std::abs(vn) + sound_speed(u) * std::hypot(n[0], n[1]);
  }
  double max_speed(const State& u, int d) const {
    return std::abs(u[1 + d] / u[0]) + sound_speed(u);
  }
  State numerical_flux(const State& um, const State& up, const Normal& n) const {
    check(um);
    check(up);
    const State fm = normal_flux(um, n), fp = normal_flux(up, n);
    const double alpha = std::max(normal_speed(um, n), normal_speed(up, n));
    State out;
    for (int c = 0; c < n_comp; ++c) out[c] = 0.5 * (fm[c] + fp[c]) - 0.5 * alpha * (up[c] - um[c]);
    return out;
  }
  /// Negates the velocity component along the unit normal n.
  State reflect(const State& u, const Normal& n) const {
    const double mn = u[1] * n[0] + u[2] * n[1];
    return {u[0], u[1] - 2.0 * mn * n[0], u[2] - 2.0 * mn * n[1], u[3]};
  }
};

}  // namespace oesv

#endif  // OESV_EQUATIONS_HPP_
