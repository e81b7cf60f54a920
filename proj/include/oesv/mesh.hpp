#ifndef OESV_MESH_HPP_
#define OESV_MESH_HPP_

#include <cstdint>
#include <vector>

#include "oesv/subdivision.hpp"

namespace oesv {

/// Interval mesh with a control-volume subdivision in every cell.
class Mesh1D {
 public:
  Mesh1D(std::vector<double> edges, SubdivisionRule rule);

  int num_cells() const { return static_cast<int>(edges_.size()) - 1; }
  double a() const { return edges_.front(); }
  double b() const { return edges_.back(); }
  double length() const { return b() - a(); }
  double left(int i) const { return edges_[i]; }
  double right(int i) const { return edges_[i + 1]; }
  double h(int i) const { return edges_[i + 1] - edges_[i]; }
  double center(int i) const { return 0.5 * (edges_[i] + edges_[i + 1]); }
  double h_max() const;
  double h_min() const;
  const std::vector<double>& edges() const { return edges_; }
  const SubdivisionRule& rule() const { return rule_; }
  int k() const { return rule_.k; }

  /// x_{i,j} for j = 0..k+1.
  double subdivision_point(int i, int j) const {
    return center(i) + 0.5 * h(i) * rule_.nodes[j];
  }
  double to_physical(int i, double xi) const { return center(i) + 0.5 * h(i) * xi; }
  double to_reference(int i, double x) const { return 2.0 * (x - center(i)) / h(i); }
  /// Cell containing x (right-continuous, last cell for x == b).
  int locate(double x) const;

 private:
  std::vector<double> edges_;
  SubdivisionRule rule_;
};

/// Uniform edges on [a, b], interior edges optionally shifted by
/// U(-1, 1) * perturbation * h / 2 from a generator seeded with `seed`.
/// Throws InvalidMesh for a >= b, n < 2, or perturbation outside [0, 0.3].
Mesh1D build_mesh_1d(double a, double b, int n, const SubdivisionRule& rule,
                     double perturbation = 0.0, std::uint64_t seed = 1);

struct Rect {
  double x0, x1, y0, y1;
  bool operator==(const Rect&) const = default;
};

/// Uniform Nx x Ny rectangle mesh. Each element carries the tensor product of
/// the 1D subdivision, so it holds (k+1)^2 control volumes. Element index is
/// ix + nx * iy.
class Mesh2D {
 public:
  Mesh2D(Rect domain, int nx, int ny, SubdivisionRule rule);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int num_cells() const { return nx_ * ny_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }
  const Rect& domain() const { return domain_; }
  const SubdivisionRule& rule() const { return rule_; }
  int k() const { return rule_.k; }

  int index(int ix, int iy) const { return ix + nx_ * iy; }
  double xc(int ix) const { return domain_.x0 + (ix + 0.5) * hx_; }
  double yc(int iy) const { return domain_.y0 + (iy + 0.5) * hy_; }
  double x_of(int ix, double xi) const { return xc(ix) + 0.5 * hx_ * xi; }
  double y_of(int iy, double eta) const { return yc(iy) + 0.5 * hy_ * eta; }
  int cvs_per_cell() const { return (rule_.k + 1) * (rule_.k + 1); }
  /// Area of control volume (jx, jy) of any element.
  double cv_measure(int jx, int jy) const;

 private:
  Rect domain_;
  int nx_, ny_;
  double hx_, hy_;
  SubdivisionRule rule_;
};

/// Throws InvalidMesh unless nx, ny >= 2 and the rectangle is non-degenerate.
Mesh2D build_mesh_2d(Rect domain, int nx, int ny, const SubdivisionRule& rule);

}  // namespace oesv

#endif  // OESV_MESH_HPP_
