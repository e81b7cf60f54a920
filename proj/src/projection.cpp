#include "oesv/projection.hpp"

#include <Eigen/Dense>
#include <vector>

#include "oesv/basis.hpp"

namespace oesv {

Function1D scalar_function(std::function<double(double)> f) {
  return [f = std::move(f)](double x, std::span<double> out) { out[0] = f(x); };
}

Function2D scalar_function(std::function<double(double, double)> f) {
  return [f = std::move(f)](double x, double y, std::span<double> out) { out[0] = f(x, y); };
}

Field l2_project(const Mesh1D& mesh, int num_comp, const Function1D& f, int n) {
  const int k = mesh.k();
  const auto g = gauss_rule(n > 0 ? n : k + 2);
  Field u(1, k, mesh.num_cells(), num_comp);
  std::vector<double> val(num_comp);
  for (int i = 0; i < mesh.num_cells(); ++i) {
    for (int q = 0; q < g.size(); ++q) {
      f(mesh.to_physical(i, g.nodes[q]), val);
      for (int l = 0; l <= k; ++l) {
        const double w = 0.5 * (2 * l + 1) * g.weights[q] * legendre(l, g.nodes[q]);
        for (int c = 0; c < num_comp; ++c) u(i, c, l) += w * val[c];
      }
    }
  }
  return u;
}

Field l2_project(const Mesh2D& mesh, int num_comp, const Function2D& f, int n) {
  const int k = mesh.k(), nm = k + 1;
  const auto g = gauss_rule(n > 0 ? n : k + 2);
  const int nq = g.size();
  std::vector<double> pl(nq * nm);
  for (int q = 0; q < nq; ++q) {
    for (int l = 0; l < nm; ++l) pl[q * nm + l] = legendre(l, g.nodes[q]);
  }
  Field u(2, k, mesh.num_cells(), num_comp);
  std::vector<double> val(num_comp);
  for (int iy = 0; iy < mesh.ny(); ++iy) {
    for (int ix = 0; ix < mesh.nx(); ++ix) {
      const int cell = mesh.index(ix, iy);
      for (int qy = 0; qy < nq; ++qy) {
        for (int qx = 0; qx < nq; ++qx) {
          f(mesh.x_of(ix, g.nodes[qx]), mesh.y_of(iy, g.nodes[qy]), val);
          const double w = 0.25 * g.weights[qx] * g.weights[qy];
          for (int b = 0; b < nm; ++b) {
            for (int a = 0; a < nm; ++a) {
              const double s = w * (2 * a + 1) * (2 * b + 1) * pl[qx * nm + a] * pl[qy * nm + b];
              for (int c = 0; c < num_comp; ++c) u(cell, c, a + nm * b) += s * val[c];
            }
          }
        }
      }
    }
  }
  return u;
}

namespace {

// Interpolation points: interior subdivision nodes plus the right end point.
std::vector<double> pstar_points(const SubdivisionRule& rule) {
  std::vector<double> p(rule.nodes.begin() + 1, rule.nodes.end());
  return p;
}

Eigen::MatrixXd vandermonde_inverse(const std::vector<double>& pts) {
  const int n = static_cast<int>(pts.size());
  Eigen::MatrixXd v(n, n);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) v(i, l) = legendre(l, pts[i]);
  }
  return v.fullPivLu().inverse();
}

}  // namespace

Field pstar_project(const Mesh1D& mesh, int num_comp, const Function1D& f) {
  const int k = mesh.k();
  const auto pts = pstar_points(mesh.rule());
  const Eigen::MatrixXd vinv = vandermonde_inverse(pts);
  Field u(1, k, mesh.num_cells(), num_comp);
  std::vector<double> val(num_comp);
  Eigen::MatrixXd samples(k + 1, num_comp);
  for (int i = 0; i < mesh.num_cells(); ++i) {
    for (int j = 0; j <= k; ++j) {
      f(mesh.to_physical(i, pts[j]), val);
      for (int c = 0; c < num_comp; ++c) samples(j, c) = val[c];
    }
    const Eigen::MatrixXd coef = vinv * samples;
    for (int c = 0; c < num_comp; ++c) {
      for (int l = 0; l <= k; ++l) u(i, c, l) = coef(l, c);
    }
  }
  return u;
}

Field pstar_project(const Mesh2D& mesh, int num_comp, const Function2D& f) {
  const int k = mesh.k(), nm = k + 1;
  const auto pts = pstar_points(mesh.rule());
  const Eigen::MatrixXd vinv = vandermonde_inverse(pts);
  Field u(2, k, mesh.num_cells(), num_comp);
  std::vector<double> val(num_comp);
  for (int iy = 0; iy < mesh.ny(); ++iy) {
    for (int ix = 0; ix < mesh.nx(); ++ix) {
      const int cell = mesh.index(ix, iy);
      for (int c = 0; c < num_comp; ++c) {
        Eigen::MatrixXd s(nm, nm);  // s(jx, jy)
        for (int jy = 0; jy < nm; ++jy) {
          for (int jx = 0; jx < nm; ++jx) {
            f(mesh.x_of(ix, pts[jx]), mesh.y_of(iy, pts[jy]), val);
            s(jx, jy) = val[c];
          }
        }
        const Eigen::MatrixXd coef = vinv * s * vinv.transpose();  // coef(a, b)
        for (int b = 0; b < nm; ++b) {
          for (int a = 0; a < nm; ++a) u(cell, c, a + nm * b) = coef(a, b);
        }
      }
    }
  }
  return u;
}

}  // namespace oesv
