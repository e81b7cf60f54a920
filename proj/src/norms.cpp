#include "oesv/norms.hpp"

#include <cmath>
#include <vector>

#include "oesv/basis.hpp"
#include "oesv/star_mass.hpp"

namespace oesv {

double star_inner(const Mesh1D& mesh, const Field& v, const Field& w) {
  const StarMassMatrix g(mesh.rule());
  double s = 0.0;
  for (int i = 0; i < mesh.num_cells(); ++i) {
    for (int c = 0; c < v.num_comp(); ++c) s += g.inner(mesh.h(i), v.modes(i, c), w.modes(i, c));
  }
  return s;
}

double star_inner(const Mesh2D& mesh, const Field& v, const Field& w) {
  const StarMassMatrix g(mesh.rule());
  const auto& G = g.reference();
  const int n = mesh.k() + 1;
  const double scale = 0.25 * mesh.hx() * mesh.hy();
  double s = 0.0;
  for (int cell = 0; cell < mesh.num_cells(); ++cell) {
    for (int c = 0; c < v.num_comp(); ++c) {
      const auto a = v.modes(cell, c), b = w.modes(cell, c);
      for (int by = 0; by < n; ++by)
        for (int bx = 0; bx < n; ++bx)
          for (int ay = 0; ay < n; ++ay)
            for (int ax = 0; ax < n; ++ax)
              s += a[ax + n * ay] * G(ax, bx) * G(ay, by) * b[bx + n * by];
    }
  }
  return scale * s;
}

double star_norm(const Mesh1D& mesh, const Field& v) { return std::sqrt(star_inner(mesh, v, v)); }
double star_norm(const Mesh2D& mesh, const Field& v) { return std::sqrt(star_inner(mesh, v, v)); }

double l2_norm(const Mesh1D& mesh, const Field& v) {
  double s = 0.0;
  for (int i = 0; i < mesh.num_cells(); ++i) {
    for (int c = 0; c < v.num_comp(); ++c) {
      const auto m = v.modes(i, c);
      for (int l = 0; l <= mesh.k(); ++l) s += mesh.h(i) / (2 * l + 1) * m[l] * m[l];
    }
  }
  return std::sqrt(s);
}

double l2_norm(const Mesh2D& mesh, const Field& v) {
  const int n = mesh.k() + 1;
  double s = 0.0;
  for (int cell = 0; cell < mesh.num_cells(); ++cell) {
    for (int c = 0; c < v.num_comp(); ++c) {
      const auto m = v.modes(cell, c);
      for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
          s += mesh.hx() * mesh.hy() / ((2 * a + 1) * (2 * b + 1)) * m[a + n * b] * m[a + n * b];
    }
  }
  return std::sqrt(s);
}

namespace {

double trace_1d(const Field& v, int cell, int comp, int k, double side) {
  const auto m = v.modes(cell, comp);
  double s = 0.0;
  for (int l = 0; l <= k; ++l) s += m[l] * (side > 0 ? 1.0 : (l % 2 ? -1.0 : 1.0));
  return s;
}

}  // namespace

double jump_inner(const Mesh1D& mesh, const Field& v, const Field& w, bool periodic) {
  const int nc = mesh.num_cells(), k = mesh.k();
  double s = 0.0;
  for (int i = 0; i < nc; ++i) {
    if (i == nc - 1 && !periodic) break;
    const int j = (i + 1) % nc;
    for (int c = 0; c < v.num_comp(); ++c) {
      const double jv = trace_1d(v, j, c, k, -1) - trace_1d(v, i, c, k, 1);
      const double jw = trace_1d(w, j, c, k, -1) - trace_1d(w, i, c, k, 1);
      s += jv * jw;
    }
  }
  return s;
}

double jump_inner(const Mesh2D& mesh, const Field& v, const Field& w, bool periodic_x,
                  bool periodic_y) {
  const int k = mesh.k(), n = k + 1, nx = mesh.nx(), ny = mesh.ny();
  const auto g = gauss_rule(n);
  std::vector<double> pg(n * n);
  for (int q = 0; q < n; ++q)
    for (int l = 0; l < n; ++l) pg[q * n + l] = legendre(l, g.nodes[q]);
  // Trace of mode set at xi = side (dir 0) or eta = side (dir 1), point q.
  auto trace = [&](const Field& f, int cell, int c, int dir, double side, int q) {
    const auto m = f.modes(cell, c);
    double s = 0.0;
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a) {
        const int normal_deg = dir == 0 ? a : b, tang_deg = dir == 0 ? b : a;
        const double pn = side > 0 ? 1.0 : (normal_deg % 2 ? -1.0 : 1.0);
        s += m[a + n * b] * pn * pg[q * n + tang_deg];
      }
    return s;
  };
  double s = 0.0;
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const int cell = mesh.index(ix, iy);
      const bool has_r = ix + 1 < nx || periodic_x, has_t = iy + 1 < ny || periodic_y;
      for (int c = 0; c < v.num_comp(); ++c) {
        for (int q = 0; q < n; ++q) {
          if (has_r) {
            const int nb = mesh.index((ix + 1) % nx, iy);
            const double jv = trace(v, nb, c, 0, -1, q) - trace(v, cell, c, 0, 1, q);
            const double jw = trace(w, nb, c, 0, -1, q) - trace(w, cell, c, 0, 1, q);
            s += 0.5 * mesh.hy() * g.weights[q] * jv * jw;
          }
          if (has_t) {
            const int nb = mesh.index(ix, (iy + 1) % ny);
            const double jv = trace(v, nb, c, 1, -1, q) - trace(v, cell, c, 1, 1, q);
            const double jw = trace(w, nb, c, 1, -1, q) - trace(w, cell, c, 1, 1, q);
            s += 0.5 * mesh.hx() * g.weights[q] * jv * jw;
          }
        }
      }
    }
  }
  return s;
}

double jump_seminorm(const Mesh1D& mesh, const Field& v, bool periodic) {
  return std::sqrt(jump_inner(mesh, v, v, periodic));
}
double jump_seminorm(const Mesh2D& mesh, const Field& v, bool px, bool py) {
  return std::sqrt(jump_inner(mesh, v, v, px, py));
}

std::vector<double> total_mass(const Mesh1D& mesh, const Field& v) {
  std::vector<double> m(v.num_comp(), 0.0);
  for (int i = 0; i < mesh.num_cells(); ++i)
    for (int c = 0; c < v.num_comp(); ++c) m[c] += mesh.h(i) * v(i, c, 0);
  return m;
}

std::vector<double> total_mass(const Mesh2D& mesh, const Field& v) {
  std::vector<double> m(v.num_comp(), 0.0);
  const double area = mesh.hx() * mesh.hy();
  for (int i = 0; i < mesh.num_cells(); ++i)
    for (int c = 0; c < v.num_comp(); ++c) m[c] += area * v(i, c, 0);
  return m;
}

}  // namespace oesv
