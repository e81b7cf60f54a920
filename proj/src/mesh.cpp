#include "oesv/mesh.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "oesv/errors.hpp"

namespace oesv {

Mesh1D::Mesh1D(std::vector<double> edges, SubdivisionRule rule)
    : edges_(std::move(edges)), rule_(std::move(rule)) {
  if (edges_.size() < 3) throw InvalidMesh("Mesh1D: need at least 2 cells");
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (!(edges_[i] > edges_[i - 1])) {
      throw InvalidMesh("Mesh1D: edges must be strictly increasing");
    }
  }
  if (h_max() > 10.0 * h_min()) {
    throw InvalidMesh("Mesh1D: quasi-uniformity ratio max h / min h exceeds 10");
  }
}

double Mesh1D::h_max() const {
  double m = 0.0;
  for (int i = 0; i < num_cells(); ++i) m = std::max(m, h(i));
  return m;
}

double Mesh1D::h_min() const {
  double m = h(0);
  for (int i = 1; i < num_cells(); ++i) m = std::min(m, h(i));
  return m;
}

int Mesh1D::locate(double x) const {
  auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
  int i = static_cast<int>(it - edges_.begin()) - 1;
  return std::clamp(i, 0, num_cells() - 1);
}

Mesh1D build_mesh_1d(double a, double b, int n, const SubdivisionRule& rule,
                     double perturbation, std::uint64_t seed) {
  if (!(a < b)) throw InvalidMesh("build_mesh_1d: need a < b");
  if (n < 2) throw InvalidMesh("build_mesh_1d: need N >= 2");
  if (!(perturbation >= 0.0 && perturbation <= 0.3)) {
    std::ostringstream os;
    os << "build_mesh_1d: perturbation " << perturbation << " outside [0, 0.3]";
    throw InvalidMesh(os.str());
  }
  const double h = (b - a) / n;
  std::vector<double> edges(n + 1);
  for (int i = 0; i <= n; ++i) edges[i] = a + i * h;
  edges[n] = b;
  if (perturbation > 0.0) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 1; i < n; ++i) edges[i] += u(gen) * perturbation * h / 2.0;
  }
  return Mesh1D(std::move(edges), rule);
}

Mesh2D::Mesh2D(Rect domain, int nx, int ny, SubdivisionRule rule)
    : domain_(domain), nx_(nx), ny_(ny), rule_(std::move(rule)) {
  if (nx < 2 || ny < 2) throw InvalidMesh("Mesh2D: need Nx, Ny >= 2");
  if (!(domain.x1 > domain.x0 && domain.y1 > domain.y0)) {
    throw InvalidMesh("Mesh2D: degenerate domain");
  }
  hx_ = (domain.x1 - domain.x0) / nx;
  hy_ = (domain.y1 - domain.y0) / ny;
}

double Mesh2D::cv_measure(int jx, int jy) const {
  const auto& z = rule_.nodes;
  return 0.25 * hx_ * hy_ * (z[jx + 1] - z[jx]) * (z[jy + 1] - z[jy]);
}

Mesh2D build_mesh_2d(Rect domain, int nx, int ny, const SubdivisionRule& rule) {
  return Mesh2D(domain, nx, ny, rule);
}

}  // namespace oesv
