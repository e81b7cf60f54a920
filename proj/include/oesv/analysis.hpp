#ifndef OESV_ANALYSIS_HPP_
#define OESV_ANALYSIS_HPP_

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "oesv/field.hpp"
#include "oesv/mesh.hpp"

namespace oesv {

struct ErrorNorms {
  double l1 = 0.0, l2 = 0.0, linf = 0.0;
};

/// Errors of component `comp` against exact(x) on (k+2)-point Gauss nodes
/// per direction. L1 and L2 are integrals over the domain (not normalised).
ErrorNorms error_norms(const Mesh1D& mesh, const Field& u, int comp,
                       const std::function<double(double)>& exact);
ErrorNorms error_norms(const Mesh2D& mesh, const Field& u, int comp,
                       const std::function<double(double, double)>& exact);

struct ConvergenceRow {
  std::string mesh;  // "N" or "NxxNy"
  long cells = 0;
  ErrorNorms err;
  bool has_rate = false;
  ErrorNorms rate;
};

/// Errors over a sequence of meshes refined by factor 2; rates are
/// log2(e_coarse / e_fine).
class ConvergenceTable {
 public:
  void add(std::string mesh, long cells, ErrorNorms err);
  const std::vector<ConvergenceRow>& rows() const { return rows_; }
  void write_csv(const std::string& path) const;
  std::string to_text() const;

 private:
  std::vector<ConvergenceRow> rows_;
};

/// (1 / (N_comp * cells)) * sum over cells and components of
/// |avg(u_next) - avg(u_prev)| / tau.
double average_residue(const Field& prev, const Field& next, double tau);

struct Overshoot {
  double undershoot = 0.0, overshoot = 0.0;
};

/// Extreme values of component `comp` sampled on (k+1)-point Gauss nodes.
std::array<double, 2> nodal_range(const Field& u, int comp);
/// max(lo - min, 0) and max(max - hi, 0) over the Gauss nodes.
Overshoot overshoot_metric(const Field& u, int comp, double lo, double hi);

/// Exact solution of the 1D Euler Riemann problem for ideal gas.
class RiemannSolver {
 public:
  /// Primitive left/right states (rho, v, p).
  RiemannSolver(std::array<double, 3> left, std::array<double, 3> right, double gamma = 1.4);
  double p_star() const { return p_star_; }
  double u_star() const { return u_star_; }
  /// Primitive state at similarity coordinate s = (x - x0) / t.
  std::array<double, 3> sample(double s) const;
  /// Min and max of density over all s.
  std::array<double, 2> density_range() const;

 private:
  double f_side(double p, const std::array<double, 3>& w, double c, double& df) const;
  std::array<double, 3> l_, r_;
  double g_, cl_, cr_, p_star_ = 0, u_star_ = 0;
};

}  // namespace oesv

#endif  // OESV_ANALYSIS_HPP_
