#ifndef OESV_BOUNDARY_HPP_
#define OESV_BOUNDARY_HPP_

#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "oesv/equations.hpp"

namespace oesv {

enum class BcKind { Periodic, Outflow, Reflective, Inflow, DoubleMachTop, DoubleMachBottom };

std::string to_string(BcKind kind);
BcKind parse_bc_kind(const std::string& name);

/// Closure of one side of the domain. Boundaries only supply exterior trace
/// states at face quadrature points; there are no ghost cells.
struct BoundaryCondition {
  BcKind kind = BcKind::Periodic;
  /// Conserved inflow state at (x, y, t), written into `out`. Required for
  /// Inflow; ignored otherwise. Returning false means the point is not an
  /// inflow point and the interior trace is used (outflow).
  std::function<bool(double x, double y, double t, std::span<double> out)> inflow;

  static BoundaryCondition periodic() { return {BcKind::Periodic, {}}; }
  static BoundaryCondition outflow() { return {BcKind::Outflow, {}}; }
  static BoundaryCondition reflective() { return {BcKind::Reflective, {}}; }
  template <class State>
  static BoundaryCondition inflow_state(State s) {
    return {BcKind::Inflow, [s](double, double, double, std::span<double> out) {
              for (std::size_t c = 0; c < s.size(); ++c) out[c] = s[c];
              return true;
            }};
  }
  static BoundaryCondition inflow_function(
      std::function<bool(double, double, double, std::span<double>)> f) {
    return {BcKind::Inflow, std::move(f)};
  }
  static BoundaryCondition double_mach_top() { return {BcKind::DoubleMachTop, {}}; }
  static BoundaryCondition double_mach_bottom() { return {BcKind::DoubleMachBottom, {}}; }
};

struct Boundaries1D {
  BoundaryCondition left = BoundaryCondition::periodic();
  BoundaryCondition right = BoundaryCondition::periodic();
  bool periodic() const { return left.kind == BcKind::Periodic; }
  /// Throws ValidationError when only one side is periodic.
  void validate() const;
};

struct Boundaries2D {
  BoundaryCondition left = BoundaryCondition::periodic();
  BoundaryCondition right = BoundaryCondition::periodic();
  BoundaryCondition bottom = BoundaryCondition::periodic();
  BoundaryCondition top = BoundaryCondition::periodic();
  bool periodic_x() const { return left.kind == BcKind::Periodic; }
  bool periodic_y() const { return bottom.kind == BcKind::Periodic; }
  void validate() const;
};

/// Zero-thickness slip wall on mesh faces: horizontal walls lie on y = coord
/// for x in (from, to); vertical walls on x = coord for y in (from, to).
struct InternalWall {
  bool horizontal = true;
  double coord = 0.0;
  double from = 0.0, to = 0.0;
};

namespace double_mach {
inline constexpr double kShockFootX = 1.0 / 6.0;
/// x position of the Mach-10 shock on the top boundary y = 1 at time t.
inline double top_shock_x(double t) { return kShockFootX + (1.0 + 20.0 * t) / std::sqrt(3.0); }
/// Postshock / preshock primitive states (rho, vx, vy, p).
inline std::array<double, 4> postshock() {
  return {8.0, 8.25 * std::cos(std::numbers::pi / 6.0), -8.25 * std::sin(std::numbers::pi / 6.0),
          116.5};
}
inline std::array<double, 4> preshock() { return {1.4, 0.0, 0.0, 1.0}; }
}  // namespace double_mach

/// Exterior trace for a boundary face point. `opposite` is the trace on the
/// other side of the domain and is only read by Periodic; `n` is the outward
/// unit normal of the domain.
template <class Eq>
typename Eq::State exterior_state(const Eq& eq, const BoundaryCondition& bc,
                                  const typename Eq::State& interior,
                                  const typename Eq::State& opposite, double x, double y,
                                  double t, const typename Eq::Normal& n) {
  using State = typename Eq::State;
  switch (bc.kind) {
    case BcKind::Periodic: return opposite;
    case BcKind::Outflow: return interior;
    case BcKind::Reflective: return eq.reflect(interior, n);
    case BcKind::Inflow: {
      State s{};
      if (!bc.inflow(x, y, t, std::span<double>(s.data(), s.size()))) return interior;
      return s;
    }
    case BcKind::DoubleMachTop:
    case BcKind::DoubleMachBottom: {
      if constexpr (Eq::n_comp == 4) {
        const bool post = bc.kind == BcKind::DoubleMachTop
                              ? x < double_mach::top_shock_x(t)
                              : x < double_mach::kShockFootX;
        if (!post && bc.kind == BcKind::DoubleMachBottom) return eq.reflect(interior, n);
        const auto w = post ? double_mach::postshock() : double_mach::preshock();
        return eq.from_primitive(w[0], w[1], w[2], w[3]);
      } else {
        return interior;
      }
    }
  }
  return interior;
}

}  // namespace oesv

#endif  // OESV_BOUNDARY_HPP_
