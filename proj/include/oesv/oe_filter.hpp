#ifndef OESV_OE_FILTER_HPP_
#define OESV_OE_FILTER_HPP_

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "oesv/basis.hpp"
#include "oesv/errors.hpp"
#include "oesv/field.hpp"
#include "oesv/parallel.hpp"

namespace oesv {

/// Damping data of one filter application.
///
/// Local faces are (left, right) in 1D and (left, right, bottom, top) in 2D.
struct DampingReport {
  int dim = 1;
  int k = 0;
  int num_cells = 0;
  int faces_per_cell = 2;
  double tau = 0.0;
  std::vector<double> sigma;     // [cell][face][m], m = 0..k
  std::vector<double> delta;     // [cell][m]
  std::vector<double> exponent;  // [cell][j]: tau * sum_{m<=j} delta^m; j = 0 entry is 0
  std::vector<double> avg;       // global average per component
  std::vector<double> norm;      // ||u - avg||_inf per component

  double sigma_at(int cell, int face, int m) const {
    return sigma[(static_cast<std::size_t>(cell) * faces_per_cell + face) * (k + 1) + m];
  }
  double delta_at(int cell, int m) const {
    return delta[static_cast<std::size_t>(cell) * (k + 1) + m];
  }
  double exponent_at(int cell, int j) const {
    return exponent[static_cast<std::size_t>(cell) * (k + 1) + j];
  }
};

/// Writes one row per (cell, m): cell, m, delta, exponent, sigma per face.
void write_damping_csv(const DampingReport& report, const std::string& path);

namespace detail {

/// Global average and sup-norm of u - avg on (k+1)-point Gauss nodes.
template <class Op>
void global_stats(const Op& op, const Field& u, std::vector<double>& avg,
                  std::vector<double>& norm) {
  const int nc = op.num_cells(), ncomp = Op::kComp, k = op.k(), n = k + 1;
  const auto g = gauss_rule(n);
  avg.assign(ncomp, 0.0);
  norm.assign(ncomp, 0.0);
  double measure = 0.0;
  for (int i = 0; i < nc; ++i) {
    double w;
    if constexpr (Op::kDim == 1) {
      w = op.mesh().h(i);
    } else {
      w = 1.0;
    }
    measure += w;
    for (int c = 0; c < ncomp; ++c) avg[c] += w * u(i, c, 0);
  }
  for (int c = 0; c < ncomp; ++c) avg[c] /= measure;
  std::vector<double> pg(n * n), row(n);
  for (int q = 0; q < n; ++q)
    for (int l = 0; l < n; ++l) pg[q * n + l] = legendre(l, g.nodes[q]);
  for (int i = 0; i < nc; ++i) {
    for (int c = 0; c < ncomp; ++c) {
      const auto m = u.modes(i, c);
      double worst = norm[c];
      if constexpr (Op::kDim == 1) {
        for (int q = 0; q < n; ++q) {
          double v = 0.0;
          for (int l = 0; l < n; ++l) v += m[l] * pg[q * n + l];
          worst = std::max(worst, std::abs(v - avg[c]));
        }
      } else {
        for (int qx = 0; qx < n; ++qx) {
          for (int b = 0; b < n; ++b) {
            double v = 0.0;
            for (int a = 0; a < n; ++a) v += m[a + n * b] * pg[qx * n + a];
            row[b] = v;
          }
          for (int qy = 0; qy < n; ++qy) {
            double v = 0.0;
            for (int b = 0; b < n; ++b) v += row[b] * pg[qy * n + b];
            worst = std::max(worst, std::abs(v - avg[c]));
          }
        }
      }
      norm[c] = worst;
    }
  }
}

inline double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace detail

/// Computes sigma, delta and the damping exponents of F_tau for the field u.
template <class Op>
DampingReport damping_report(const Op& op, const Field& u, double tau) {
  const int k = op.k(), n = k + 1, nc = op.num_cells();
  constexpr int ncomp = Op::kComp;
  if (k < 1) throw ValidationError("the oscillation-eliminating filter requires k >= 1");
  DampingReport rep;
  rep.dim = Op::kDim;
  rep.k = k;
  rep.num_cells = nc;
  rep.faces_per_cell = 2 * Op::kDim;
  rep.tau = tau;
  rep.sigma.assign(static_cast<std::size_t>(nc) * rep.faces_per_cell * n, 0.0);
  rep.delta.assign(static_cast<std::size_t>(nc) * n, 0.0);
  rep.exponent.assign(static_cast<std::size_t>(nc) * n, 0.0);
  detail::global_stats(op, u, rep.avg, rep.norm);

  // Components that are constant up to the floor do not contribute.
  std::vector<double> inv_norm(ncomp, 0.0);
  for (int c = 0; c < ncomp; ++c) {
    if (rep.norm[c] >= 1e-300) inv_norm[c] = 1.0 / rep.norm[c];
  }
  // dref[(order * n + l) * 2 + side] = P_l^(order)(-1 or +1)
  std::vector<double> dref(static_cast<std::size_t>(n) * n * 2);
  for (int o = 0; o < n; ++o)
    for (int l = 0; l < n; ++l) {
      dref[(o * n + l) * 2 + 0] = legendre_deriv_order(l, o, -1.0);
      dref[(o * n + l) * 2 + 1] = legendre_deriv_order(l, o, 1.0);
    }
  std::vector<double> coef(n);
  for (int m = 0; m < n; ++m) {
    coef[m] = (2.0 * m + 1.0) / (2.0 * (2.0 * k - 1.0) * detail::factorial(m));
  }
  const auto& eq = op.equation();

  if constexpr (Op::kDim == 1) {
    const auto& mesh = op.mesh();
    const bool periodic = op.periodic();
    // d^m u / dx^m at the left (side 0) or right (side 1) end of a cell.
    auto deriv = [&](int cell, int c, int o, int side) {
      const auto md = u.modes(cell, c);
      double s = 0.0;
      for (int l = o; l < n; ++l) s += md[l] * dref[(o * n + l) * 2 + side];
      return s * std::pow(2.0 / mesh.h(cell), o);
    };
    parallel_for(nc, [&](long ci) {
      const int i = static_cast<int>(ci);
      const double h = mesh.h(i);
      typename Op::State ubar{};
      for (int c = 0; c < ncomp; ++c) ubar[c] = u(i, c, 0);
      double beta = 0.0;
      bool beta_done = false;
      for (int f = 0; f < 2; ++f) {
        int nb;
        if (f == 0) {
          nb = i > 0 ? i - 1 : (periodic ? nc - 1 : -1);
        } else {
          nb = i + 1 < nc ? i + 1 : (periodic ? 0 : -1);
        }
        if (nb < 0) continue;
        if (!beta_done) {
          try {
            eq.check(ubar);
          } catch (const NonPhysicalState& e) {
            throw e.with_context(i, -1, -1.0);
          }
          beta = eq.normal_speed(ubar, typename Op::Normal{1.0});
          beta_done = true;
        }
        for (int m = 0; m < n; ++m) {
          double sig = 0.0;
          for (int c = 0; c < ncomp; ++c) {
            if (inv_norm[c] == 0.0) continue;
            const double jump = f == 0 ? deriv(i, c, m, 0) - deriv(nb, c, m, 1)
                                       : deriv(nb, c, m, 0) - deriv(i, c, m, 1);
            sig = std::max(sig, coef[m] * std::pow(h, m) * std::abs(jump) * inv_norm[c]);
          }
          rep.sigma[(static_cast<std::size_t>(i) * 2 + f) * n + m] = sig;
          rep.delta[static_cast<std::size_t>(i) * n + m] += beta * sig / h;
        }
      }
    });
  } else {
    const auto& mesh = op.mesh();
    const int nx = mesh.nx(), ny = mesh.ny();
    const bool px = op.boundaries().periodic_x(), py = op.boundaries().periodic_y();
    const double hx = mesh.hx(), hy = mesh.hy();
    std::vector<double> sx(n), sy(n);
    for (int o = 0; o < n; ++o) {
      sx[o] = std::pow(2.0 / hx, o);
      sy[o] = std::pow(2.0 / hy, o);
    }
    const bool total = op.multi_index() == MultiIndexOrder::Total;
    std::vector<double> hpow_x(n), hpow_y(n);
    for (int m = 0; m < n; ++m) {
      hpow_x[m] = std::pow(hx, m);
      hpow_y[m] = std::pow(hy, m);
    }
    constexpr int kMaxN = 8;
    if (n > kMaxN) throw ValidationError("filter supports k <= 7 in 2D");
    // out[((side_x * 2 + side_y) * n + ox) * n + oy] = d^(ox+oy) u / dx^ox dy^oy
    // at the corner (side_x, side_y) of the cell, for every component.
    auto corners = [&](int cell, int c, double* out) {
      const auto md = u.modes(cell, c);
      double t[kMaxN];
      for (int side_x = 0; side_x < 2; ++side_x) {
        for (int ox = 0; ox < n; ++ox) {
          for (int b = 0; b < n; ++b) {
            double v = 0.0;
            for (int a = ox; a < n; ++a) v += md[a + n * b] * dref[(ox * n + a) * 2 + side_x];
            t[b] = v * sx[ox];
          }
          for (int side_y = 0; side_y < 2; ++side_y) {
            for (int oy = 0; oy < n; ++oy) {
              double v = 0.0;
              for (int b = oy; b < n; ++b) v += t[b] * dref[(oy * n + b) * 2 + side_y];
              out[((side_x * 2 + side_y) * n + ox) * n + oy] = v * sy[oy];
            }
          }
        }
      }
    };
    // Corner derivatives of every cell, computed once and read by both
    // cells sharing a face.
    const std::size_t csize = 4 * static_cast<std::size_t>(n) * n;
    std::vector<double> cbuf(static_cast<std::size_t>(nc) * ncomp * csize);
    parallel_for(nc, [&](long ci) {
      for (int c = 0; c < ncomp; ++c) {
        if (inv_norm[c] != 0.0) corners(static_cast<int>(ci), c, &cbuf[(ci * ncomp + c) * csize]);
      }
    });
    parallel_for(nc, [&](long ci) {
      const int cell = static_cast<int>(ci);
      const int ix = cell % nx, iy = cell / nx;
      typename Op::State ubar{};
      for (int c = 0; c < ncomp; ++c) ubar[c] = u(cell, c, 0);
      bool checked = false;
      for (int f = 0; f < 4; ++f) {
        const int dir = f / 2, hi = f % 2;
        int nb = -1;
        bool wall = false;
        if (dir == 0) {
          const int jx = hi ? ix + 1 : ix - 1;
          if (jx >= 0 && jx < nx) {
            nb = mesh.index(jx, iy);
          } else if (px) {
            nb = mesh.index((jx + nx) % nx, iy);
          }
          wall = op.is_wall_x(hi ? ix + 1 : ix, iy);
        } else {
          const int jy = hi ? iy + 1 : iy - 1;
          if (jy >= 0 && jy < ny) {
            nb = mesh.index(ix, jy);
          } else if (py) {
            nb = mesh.index(ix, (jy + ny) % ny);
          }
          wall = op.is_wall_y(ix, hi ? iy + 1 : iy);
        }
        if (nb < 0 || wall) continue;
        if (!checked) {
          try {
            eq.check(ubar);
          } catch (const NonPhysicalState& e) {
            throw e.with_context(cell, -1, -1.0);
          }
          checked = true;
        }
        typename Op::Normal nrm{dir == 0 ? 1.0 : 0.0, dir == 0 ? 0.0 : 1.0};
        const double beta = eq.normal_speed(ubar, nrm);
        const double h = dir == 0 ? hx : hy;
        const double* hpow = dir == 0 ? hpow_x.data() : hpow_y.data();
        double sigf[kMaxN] = {};
        for (int c = 0; c < ncomp; ++c) {
          if (inv_norm[c] == 0.0) continue;
          const double* own = &cbuf[(static_cast<std::size_t>(cell) * ncomp + c) * csize];
          const double* other = &cbuf[(static_cast<std::size_t>(nb) * ncomp + c) * csize];
          for (int m = 0; m < n; ++m) {
            double sum = 0.0;
            for (int oy = 0; oy <= m; ++oy) {
              for (int ox = 0; ox <= m; ++ox) {
                if ((total ? ox + oy : std::max(ox, oy)) != m) continue;
                double mean = 0.0;
                for (int corner = 0; corner < 2; ++corner) {
                  const int mine = dir == 0 ? hi * 2 + corner : corner * 2 + hi;
                  const int theirs = dir == 0 ? (1 - hi) * 2 + corner : corner * 2 + (1 - hi);
                  const double a = own[(mine * n + ox) * n + oy];
                  const double b = other[(theirs * n + ox) * n + oy];
                  mean += 0.5 * std::abs(b - a);
                }
                sum += mean;
              }
            }
            sigf[m] = std::max(sigf[m], coef[m] * hpow[m] * sum * inv_norm[c]);
          }
        }
        for (int m = 0; m < n; ++m) {
          rep.sigma[(static_cast<std::size_t>(cell) * 4 + f) * n + m] = sigf[m];
          rep.delta[static_cast<std::size_t>(cell) * n + m] += beta * sigf[m] / h;
        }
      }
    });
  }
  for (int i = 0; i < nc; ++i) {
    double acc = rep.delta[static_cast<std::size_t>(i) * n];
    for (int j = 1; j < n; ++j) {
      acc += rep.delta[static_cast<std::size_t>(i) * n + j];
      rep.exponent[static_cast<std::size_t>(i) * n + j] = tau * acc;
    }
  }
  return rep;
}

/// Applies F_tau in place. Mode group j >= 1 of every cell is multiplied by
/// exp(-tau * sum_{m<=j} delta^m) computed from the incoming field; cell
/// averages are untouched.
template <class Op>
void apply_filter(const Op& op, Field& u, double tau, DampingReport* report = nullptr) {
  DampingReport rep = damping_report(op, u, tau);
  const int n = op.k() + 1;
  std::vector<double> factor(n);
  for (int i = 0; i < op.num_cells(); ++i) {
    bool active = false;
    for (int j = 1; j < n; ++j) {
      const double e = rep.exponent[static_cast<std::size_t>(i) * n + j];
      factor[j] = std::exp(-e);
      active = active || e != 0.0;
    }
    if (!active) continue;
    for (int c = 0; c < Op::kComp; ++c) {
      auto m = u.modes(i, c);
      if constexpr (Op::kDim == 1) {
        for (int j = 1; j < n; ++j) m[j] *= factor[j];
      } else {
        for (int b = 0; b < n; ++b)
          for (int a = 0; a < n; ++a) {
            const int j = std::max(a, b);
            if (j > 0) m[a + n * b] *= factor[j];
          }
      }
    }
  }
  if (report) *report = std::move(rep);
}

template <class Op>
Field filtered(const Op& op, Field u, double tau) {
  apply_filter(op, u, tau);
  return u;
}

}  // namespace oesv

#endif  // OESV_OE_FILTER_HPP_
