#ifndef OESV_PROBLEMS_HPP_
#define OESV_PROBLEMS_HPP_

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oesv/boundary.hpp"
#include "oesv/field.hpp"
#include "oesv/mesh.hpp"
#include "oesv/projection.hpp"

namespace oesv {

enum class EquationKind { Advection1D, Euler1D, Advection2D, Euler2D };
std::string to_string(EquationKind kind);
EquationKind parse_equation_kind(const std::string& name);
inline int dimension(EquationKind k) {
  return (k == EquationKind::Advection1D || k == EquationKind::Euler1D) ? 1 : 2;
}
int num_components(EquationKind k);

struct MeshSize {
  int nx = 0, ny = 0;
};

/// Exact solution, component values at (x, y, t); y is ignored in 1D.
using ExactSolution = std::function<void(double x, double y, double t, std::span<double> out)>;

/// Fully specified benchmark: equation, domain, data, closures and the mesh,
/// degree and final time of the reference experiment plus a reduced
/// desk-scale mesh.
struct Problem {
  std::string name;
  std::string description;
  EquationKind equation = EquationKind::Advection1D;
  double gamma = 1.4;
  std::array<double, 2> velocity{1.0, 1.0};
  Rect domain{0.0, 1.0, 0.0, 1.0};  // 1D uses x0, x1
  int k = 2;
  MeshSize paper_mesh, desk_mesh;
  double t_final = 1.0;
  /// CFL = cfl_factor / (2k + 1).
  double cfl_factor = 1.0;
  /// Smooth problems use the (k+1)-order RK scheme, others SSPRK3.
  bool smooth = false;
  /// Steady-state runs record the average residue.
  bool steady = false;
  /// Conserved initial data.
  Function2D initial;
  /// Gauss points per direction for projecting the initial data.
  int init_points = 0;
  std::optional<ExactSolution> exact;
  Boundaries1D bc1;
  Boundaries2D bc2;
  std::vector<InternalWall> walls;
  /// Shock-vortex interaction: isentropic vortex added upstream of the shock.
  struct Vortex {
    double eps, alpha, rc, x, y;
  };
  std::optional<Vortex> vortex;
  /// Sedov: energy of the centre cell is center_energy / h.
  double center_energy = 0.0;
  /// Component watched by the overshoot metric and its admissible range
  /// (NaN when unknown).
  int watch_component = 0;
  double watch_lo = 0.0, watch_hi = 0.0;

  int dim() const { return dimension(equation); }
  int num_comp() const { return num_components(equation); }
  MeshSize mesh_size(bool paper_scale) const { return paper_scale ? paper_mesh : desk_mesh; }
  double cfl(int degree) const { return cfl_factor / (2.0 * degree + 1.0); }
  double center_cell_energy(double h) const { return center_energy / h; }
  std::string default_scheme(int degree) const;

  /// Projected initial field on the given mesh (applies the Sedov centre
  /// cell when center_energy > 0).
  Field initial_field(const Mesh1D& mesh) const;
  Field initial_field(const Mesh2D& mesh) const;
};

/// Throws UnknownBenchmark listing the known names.
Problem benchmark(const std::string& name);
std::vector<std::string> benchmark_names();

/// Initial-data library used by inline problem specifications: any
/// benchmark name, or "constant".
Function2D named_initial_condition(const std::string& name, EquationKind eq, double gamma);

}  // namespace oesv

#endif  // OESV_PROBLEMS_HPP_
