#ifndef OESV_SV_OPERATOR_2D_HPP_
#define OESV_SV_OPERATOR_2D_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "oesv/basis.hpp"
#include "oesv/boundary.hpp"
#include "oesv/equations.hpp"
#include "oesv/errors.hpp"
#include "oesv/field.hpp"
#include "oesv/mesh.hpp"
#include "oesv/parallel.hpp"
#include "oesv/star_mass.hpp"

namespace oesv {

/// Spectral volume operator on a structured rectangular mesh with Q^k
/// elements and tensor-product control volumes.
///
/// Every CV face segment is integrated with a (k+1)-point Gauss rule, so each
/// element face carries S = (k+1)^2 flux points. The modal residual applies
/// the 1D DG representation in each direction:
///   r_ab = (hy/2) sum_p Y_b(p) g^x_a(p) + (hx/2) sum_p Y_a(p) g^y_b(p),
/// with Y_b(p) = (M* P_b)|_{CV(p)} times the segment weight and g^x_a the 1D
/// quadrature form on the x-line through flux point p.
template <class Eq>
class SvOperator2D {
 public:
  using Equation = Eq;
  using State = typename Eq::State;
  using Normal = typename Eq::Normal;
  static constexpr int kDim = 2;
  static constexpr int kComp = Eq::n_comp;
  static constexpr int kMaxK = 6;

  SvOperator2D(Mesh2D mesh, Eq eq, Boundaries2D bcs, std::vector<InternalWall> walls = {})
      : mesh_(std::move(mesh)), eq_(eq), bcs_(std::move(bcs)), walls_(std::move(walls)),
        mass_(mesh_.rule()) {
    bcs_.validate();
    const auto& rule = mesh_.rule();
    k_ = rule.k;
    n_ = k_ + 1;
    np_ = k_ + 2;
    S_ = n_ * n_;
    if (k_ > kMaxK) throw ValidationError("2D operator supports k <= 6");
    const auto g = gauss_rule(n_);
    seg_pts_.resize(S_);
    seg_w_.resize(S_);
    for (int l = 0; l < n_; ++l) {
      const double lo = rule.nodes[l], hi = rule.nodes[l + 1];
      for (int q = 0; q < n_; ++q) {
        seg_pts_[l * n_ + q] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * g.nodes[q];
        seg_w_[l * n_ + q] = 0.5 * (hi - lo) * g.weights[q];
      }
    }
    vn_.resize(np_ * n_);
    wd_.resize(n_ * np_);
    for (int j = 0; j < np_; ++j) {
      for (int a = 0; a < n_; ++a) {
        vn_[j * n_ + a] = legendre(a, rule.nodes[j]);
        wd_[a * np_ + j] = rule.weights[j] * legendre_deriv(a, rule.nodes[j]);
      }
    }
    vs_.resize(S_ * n_);
    for (int p = 0; p < S_; ++p) {
      for (int a = 0; a < n_; ++a) vs_[p * n_ + a] = legendre(a, seg_pts_[p]);
    }
    const Eigen::MatrixXd mt = mstar_table(rule);
    y_.resize(n_ * S_);
    for (int b = 0; b < n_; ++b) {
      for (int p = 0; p < S_; ++p) y_[b * S_ + p] = mt(p / n_, b) * seg_w_[p];
    }
    ginv_ = mass_.reference_inverse();
    cv_int_ = cv_integral_table(rule);
    mark_walls();
  }

  const Mesh2D& mesh() const { return mesh_; }
  const Eq& equation() const { return eq_; }
  const Boundaries2D& boundaries() const { return bcs_; }
  const std::vector<InternalWall>& walls() const { return walls_; }
  const StarMassMatrix& star_mass() const { return mass_; }
  const SubdivisionRule& rule() const { return mesh_.rule(); }
  int k() const { return k_; }
  MultiIndexOrder multi_index() const { return multi_index_; }
  void set_multi_index(MultiIndexOrder order) { multi_index_ = order; }
  int num_cells() const { return mesh_.num_cells(); }
  /// Flux points per element face.
  int face_points() const { return S_; }
  /// Reference coordinate of face flux point p and its weight (sum 2).
  double face_point(int p) const { return seg_pts_[p]; }
  double face_weight(int p) const { return seg_w_[p]; }
  bool is_wall_x(int ix_face, int iy) const { return xwall_[ix_face + (mesh_.nx() + 1) * iy]; }
  bool is_wall_y(int ix, int iy_face) const { return ywall_[ix + mesh_.nx() * iy_face]; }

  Field make_field() const { return Field(2, k_, num_cells(), kComp); }

  State eval(const Field& u, int cell, double xi, double eta) const {
    double px[kMaxK + 1]{}, py[kMaxK + 1]{};
    for (int a = 0; a < n_; ++a) {
      px[a] = legendre(a, xi);
      py[a] = legendre(a, eta);
    }
    State s{};
    for (int c = 0; c < kComp; ++c) {
      const auto m = u.modes(cell, c);
      double v = 0.0;
      for (int b = 0; b < n_; ++b) {
        for (int a = 0; a < n_; ++a) v += m[a + n_ * b] * px[a] * py[b];
      }
      s[c] = v;
    }
    return s;
  }
  State average(const Field& u, int cell) const {
    State s{};
    for (int c = 0; c < kComp; ++c) s[c] = u(cell, c, 0);
    return s;
  }

  /// Numerical fluxes on every element face, laid out
  /// [cell][face][point] with faces (left, right, bottom, top). Values are
  /// fluxes in the +x direction for faces 0/1 and +y for faces 2/3.
  std::vector<State> face_fluxes(const Field& u, double t) const {
    const int nc = num_cells();
    std::vector<State> tr(static_cast<std::size_t>(nc) * 4 * S_);
    parallel_for(nc, [&](long cell) { cell_traces(u, static_cast<int>(cell), &tr[cell * 4 * S_]); });
    std::vector<State> fl(tr.size());
    const int nx = mesh_.nx(), ny = mesh_.ny();
    parallel_for(ny, [&](long iy) { x_face_row(tr, fl, static_cast<int>(iy), t); });
    parallel_for(nx, [&](long ix) { y_face_column(tr, fl, static_cast<int>(ix), t); });
    (void)ny;
    return fl;
  }

  /// Right-hand side before the star-mass solve.
  Field residual_rhs(const Field& u, double t) const {
    Field r = make_field();
    const auto fl = face_fluxes(u, t);
    parallel_for(num_cells(), [&](long cell) {
      cell_rhs(u, fl, static_cast<int>(cell), r);
    });
    return r;
  }

  void residual(const Field& u, double t, Field& du) const {
    const auto fl = face_fluxes(u, t);
    if (!du.same_shape(u)) du = make_field();
    parallel_for(num_cells(), [&](long cell) {
      cell_rhs(u, fl, static_cast<int>(cell), du);
      solve_cell(du, static_cast<int>(cell));
    });
  }
  Field residual(const Field& u, double t) const {
    Field du = make_field();
    residual(u, t, du);
    return du;
  }

  void solve_star_mass(Field& r) const {
    for (int cell = 0; cell < num_cells(); ++cell) solve_cell(r, cell);
  }

  /// Control-volume balance d/dt int_{CV} u laid out [cell][comp][jx + n jy].
  std::vector<double> residual_cv(const Field& u, double t) const {
    const auto fl = face_fluxes(u, t);
    const double hx = mesh_.hx(), hy = mesh_.hy();
    std::vector<double> out(static_cast<std::size_t>(num_cells()) * kComp * S_);
    std::vector<State> fx(np_ * S_), fy(np_ * S_);
    for (int cell = 0; cell < num_cells(); ++cell) {
      for (int p = 0; p < S_; ++p) {
        fx[p] = fl[(cell * 4 + 0) * S_ + p];
        fx[(k_ + 1) * S_ + p] = fl[(cell * 4 + 1) * S_ + p];
        fy[p] = fl[(cell * 4 + 2) * S_ + p];
        fy[(k_ + 1) * S_ + p] = fl[(cell * 4 + 3) * S_ + p];
        for (int j = 1; j <= k_; ++j) {
          const double z = rule().nodes[j];
          fx[j * S_ + p] = eq_.flux(eval(u, cell, z, seg_pts_[p]), 0);
          fy[j * S_ + p] = eq_.flux(eval(u, cell, seg_pts_[p], z), 1);
        }
      }
      for (int c = 0; c < kComp; ++c) {
        for (int jy = 0; jy < n_; ++jy) {
          for (int jx = 0; jx < n_; ++jx) {
            double s = 0.0;
            for (int q = 0; q < n_; ++q) {
              const int py = jy * n_ + q, px = jx * n_ + q;
              s += 0.5 * hy * seg_w_[py] * (fx[jx * S_ + py][c] - fx[(jx + 1) * S_ + py][c]);
              s += 0.5 * hx * seg_w_[px] * (fy[jy * S_ + px][c] - fy[(jy + 1) * S_ + px][c]);
            }
            out[(static_cast<std::size_t>(cell) * kComp + c) * S_ + jx + n_ * jy] = s;
          }
        }
      }
    }
    return out;
  }

  /// int_{CV} v of a modal field, laid out like residual_cv().
  std::vector<double> cv_integrals(const Field& v) const {
    const double scale = 0.25 * mesh_.hx() * mesh_.hy();
    std::vector<double> out(static_cast<std::size_t>(num_cells()) * kComp * S_);
    for (int cell = 0; cell < num_cells(); ++cell) {
      for (int c = 0; c < kComp; ++c) {
        const auto m = v.modes(cell, c);
        for (int jy = 0; jy < n_; ++jy) {
          for (int jx = 0; jx < n_; ++jx) {
            double s = 0.0;
            for (int b = 0; b < n_; ++b) {
              for (int a = 0; a < n_; ++a) s += cv_int_(jx, a) * cv_int_(jy, b) * m[a + n_ * b];
            }
            out[(static_cast<std::size_t>(cell) * kComp + c) * S_ + jx + n_ * jy] = scale * s;
          }
        }
      }
    }
    return out;
  }

  /// lambda_x / hx + lambda_y / hy with global maxima at cell averages.
  double max_rate(const Field& u) const {
    double lx = 0.0, ly = 0.0;
    for (int cell = 0; cell < num_cells(); ++cell) {
      const State s = average(u, cell);
      check_with_context(s, cell);
      lx = std::max(lx, eq_.max_speed(s, 0));
      ly = std::max(ly, eq_.max_speed(s, 1));
    }
    return lx / mesh_.hx() + ly / mesh_.hy();
  }

  /// Net outward flux through the domain boundary, per component.
  State boundary_outflow(const Field& u, double t) const {
    const auto fl = face_fluxes(u, t);
    const int nx = mesh_.nx(), ny = mesh_.ny();
    State out{};
    for (int iy = 0; iy < ny; ++iy) {
      for (int p = 0; p < S_; ++p) {
        const double w = 0.5 * mesh_.hy() * seg_w_[p];
        for (int c = 0; c < kComp; ++c) {
          out[c] += w * (fl[(mesh_.index(nx - 1, iy) * 4 + 1) * S_ + p][c] -
                         fl[(mesh_.index(0, iy) * 4 + 0) * S_ + p][c]);
        }
      }
    }
    for (int ix = 0; ix < nx; ++ix) {
      for (int p = 0; p < S_; ++p) {
        const double w = 0.5 * mesh_.hx() * seg_w_[p];
        for (int c = 0; c < kComp; ++c) {
          out[c] += w * (fl[(mesh_.index(ix, ny - 1) * 4 + 3) * S_ + p][c] -
                         fl[(mesh_.index(ix, 0) * 4 + 2) * S_ + p][c]);
        }
      }
    }
    return out;
  }

  void check_physical(const Field& u) const {
    for (int cell = 0; cell < num_cells(); ++cell) {
      for (int jy = 0; jy < np_; ++jy) {
        for (int jx = 0; jx < np_; ++jx) {
          check_with_context(eval(u, cell, rule().nodes[jx], rule().nodes[jy]), cell);
        }
      }
    }
  }

 private:
  void mark_walls() {
    const int nx = mesh_.nx(), ny = mesh_.ny();
    const auto& d = mesh_.domain();
    xwall_.assign(static_cast<std::size_t>(nx + 1) * ny, false);
    ywall_.assign(static_cast<std::size_t>(nx) * (ny + 1), false);
    for (const auto& w : walls_) {
      if (w.horizontal) {
        const double f = (w.coord - d.y0) / mesh_.hy();
        const int iy = static_cast<int>(std::lround(f));
        if (std::abs(f - iy) > 1e-9 || iy <= 0 || iy >= ny) {
          throw InvalidMesh("internal wall does not lie on an interior horizontal mesh line");
        }
        for (int ix = 0; ix < nx; ++ix) {
          const double xm = mesh_.xc(ix);
          if (xm > w.from && xm < w.to) ywall_[ix + nx * iy] = true;
        }
      } else {
        const double f = (w.coord - d.x0) / mesh_.hx();
        const int ix = static_cast<int>(std::lround(f));
        if (std::abs(f - ix) > 1e-9 || ix <= 0 || ix >= nx) {
          throw InvalidMesh("internal wall does not lie on an interior vertical mesh line");
        }
        for (int iy = 0; iy < ny; ++iy) {
          const double ym = mesh_.yc(iy);
          if (ym > w.from && ym < w.to) xwall_[ix + (nx + 1) * iy] = true;
        }
      }
    }
  }

  /// Traces on the four faces of one cell at the S flux points.
  void cell_traces(const Field& u, int cell, State* tr) const {
    double t1[(kMaxK + 1) * (kMaxK + 1) * (kMaxK + 1)];
    for (int c = 0; c < kComp; ++c) {
      const double* m = u.modes(cell, c).data();
      // x-lines: t1(a,p) = sum_b c_ab P_b(s_p)
      for (int a = 0; a < n_; ++a) {
        for (int p = 0; p < S_; ++p) {
          double s = 0.0;
          for (int b = 0; b < n_; ++b) s += m[a + n_ * b] * vs_[p * n_ + b];
          t1[a * S_ + p] = s;
        }
      }
      for (int p = 0; p < S_; ++p) {
        double l = 0.0, r = 0.0;
        for (int a = 0; a < n_; ++a) {
          l += vn_[a] * t1[a * S_ + p];
          r += vn_[(k_ + 1) * n_ + a] * t1[a * S_ + p];
        }
        tr[0 * S_ + p][c] = l;
        tr[1 * S_ + p][c] = r;
      }
      // y-lines: t1(b,p) = sum_a c_ab P_a(s_p)
      for (int b = 0; b < n_; ++b) {
        for (int p = 0; p < S_; ++p) {
          double s = 0.0;
          for (int a = 0; a < n_; ++a) s += m[a + n_ * b] * vs_[p * n_ + a];
          t1[b * S_ + p] = s;
        }
      }
      for (int p = 0; p < S_; ++p) {
        double l = 0.0, r = 0.0;
        for (int b = 0; b < n_; ++b) {
          l += vn_[b] * t1[b * S_ + p];
          r += vn_[(k_ + 1) * n_ + b] * t1[b * S_ + p];
        }
        tr[2 * S_ + p][c] = l;
        tr[3 * S_ + p][c] = r;
      }
    }
  }

  State flux_ctx(const State& um, const State& up, const Normal& n, int cell) const {
    try {
      return eq_.numerical_flux(um, up, n);
    } catch (const NonPhysicalState& e) {
      throw e.with_context(cell, -1, -1.0);
    }
  }
  void check_with_context(const State& s, int cell) const {
    try {
      eq_.check(s);
    } catch (const NonPhysicalState& e) {
      throw e.with_context(cell, -1, -1.0);
    }
  }

  void x_face_row(const std::vector<State>& tr, std::vector<State>& fl, int iy, double t) const {
    const int nx = mesh_.nx();
    const Normal n{1.0, 0.0};
    auto at = [&](int ix, int face, int p) -> std::size_t {
      return (static_cast<std::size_t>(mesh_.index(ix, iy)) * 4 + face) * S_ + p;
    };
    for (int f = 1; f < nx; ++f) {
      const bool wall = xwall_[f + (nx + 1) * iy];
      for (int p = 0; p < S_; ++p) {
        const State& um = tr[at(f - 1, 1, p)];
        const State& up = tr[at(f, 0, p)];
        if (wall) {
          fl[at(f - 1, 1, p)] = flux_ctx(um, eq_.reflect(um, n), n, mesh_.index(f - 1, iy));
          fl[at(f, 0, p)] = flux_ctx(eq_.reflect(up, n), up, n, mesh_.index(f, iy));
        } else {
          fl[at(f - 1, 1, p)] = fl[at(f, 0, p)] = flux_ctx(um, up, n, mesh_.index(f, iy));
        }
      }
    }
    const auto& d = mesh_.domain();
    for (int p = 0; p < S_; ++p) {
      const State& lin = tr[at(0, 0, p)];
      const State& rin = tr[at(nx - 1, 1, p)];
      if (bcs_.periodic_x()) {
        fl[at(0, 0, p)] = fl[at(nx - 1, 1, p)] = flux_ctx(rin, lin, n, mesh_.index(0, iy));
      } else {
        const double y = mesh_.y_of(iy, seg_pts_[p]);
        const State gl = exterior_state(eq_, bcs_.left, lin, rin, d.x0, y, t, Normal{-1.0, 0.0});
        const State gr = exterior_state(eq_, bcs_.right, rin, lin, d.x1, y, t, Normal{1.0, 0.0});
        fl[at(0, 0, p)] = flux_ctx(gl, lin, n, mesh_.index(0, iy));
        fl[at(nx - 1, 1, p)] = flux_ctx(rin, gr, n, mesh_.index(nx - 1, iy));
      }
    }
  }

  void y_face_column(const std::vector<State>& tr, std::vector<State>& fl, int ix,
                     double t) const {
    const int nx = mesh_.nx(), ny = mesh_.ny();
    const Normal n{0.0, 1.0};
    auto at = [&](int iy, int face, int p) -> std::size_t {
      return (static_cast<std::size_t>(mesh_.index(ix, iy)) * 4 + face) * S_ + p;
    };
    for (int f = 1; f < ny; ++f) {
      const bool wall = ywall_[ix + nx * f];
      for (int p = 0; p < S_; ++p) {
        const State& um = tr[at(f - 1, 3, p)];
        const State& up = tr[at(f, 2, p)];
        if (wall) {
          fl[at(f - 1, 3, p)] = flux_ctx(um, eq_.reflect(um, n), n, mesh_.index(ix, f - 1));
          fl[at(f, 2, p)] = flux_ctx(eq_.reflect(up, n), up, n, mesh_.index(ix, f));
        } else {
          fl[at(f - 1, 3, p)] = fl[at(f, 2, p)] = flux_ctx(um, up, n, mesh_.index(ix, f));
        }
      }
    }
    const auto& d = mesh_.domain();
    for (int p = 0; p < S_; ++p) {
      const State& bin = tr[at(0, 2, p)];
      const State& tin = tr[at(ny - 1, 3, p)];
      if (bcs_.periodic_y()) {
        fl[at(0, 2, p)] = fl[at(ny - 1, 3, p)] = flux_ctx(tin, bin, n, mesh_.index(ix, 0));
      } else {
        const double x = mesh_.x_of(ix, seg_pts_[p]);
        const State gb = exterior_state(eq_, bcs_.bottom, bin, tin, x, d.y0, t, Normal{0.0, -1.0});
        const State gt = exterior_state(eq_, bcs_.top, tin, bin, x, d.y1, t, Normal{0.0, 1.0});
        fl[at(0, 2, p)] = flux_ctx(gb, bin, n, mesh_.index(ix, 0));
        fl[at(ny - 1, 3, p)] = flux_ctx(tin, gt, n, mesh_.index(ix, ny - 1));
      }
    }
  }

  /// r_ab for one cell written into out (all components).
  void cell_rhs(const Field& u, const std::vector<State>& fl, int cell, Field& out) const {
    constexpr int kN = kMaxK + 1, kS = kN * kN, kNp = kMaxK + 2;
    double t1[kN * kS];
    State fx[kNp * kS];  // flux on x-lines j at point p (and reused for y-lines)
    double g[kN * kS];
    double r[kComp][kN * kN];
    const double hx = mesh_.hx(), hy = mesh_.hy();
    const State* face = &fl[static_cast<std::size_t>(cell) * 4 * S_];

    for (int dir = 0; dir < 2; ++dir) {
      // Interior line values and physical fluxes.
      for (int c = 0; c < kComp; ++c) {
        const double* m = u.modes(cell, c).data();
        for (int a = 0; a < n_; ++a) {
          for (int p = 0; p < S_; ++p) {
            double s = 0.0;
            if (dir == 0) {
              for (int b = 0; b < n_; ++b) s += m[a + n_ * b] * vs_[p * n_ + b];
            } else {
              for (int b = 0; b < n_; ++b) s += m[b + n_ * a] * vs_[p * n_ + b];
            }
            t1[a * S_ + p] = s;
          }
        }
        for (int j = 1; j <= k_; ++j) {
          for (int p = 0; p < S_; ++p) {
            double s = 0.0;
            for (int a = 0; a < n_; ++a) s += vn_[j * n_ + a] * t1[a * S_ + p];
            fx[j * S_ + p][c] = s;
          }
        }
      }
      for (int j = 1; j <= k_; ++j) {
        for (int p = 0; p < S_; ++p) {
          State& s = fx[j * S_ + p];
          check_with_context(s, cell);
          s = eq_.flux(s, dir);
        }
      }
      const State* lo = face + (2 * dir) * S_;
      const State* hi = face + (2 * dir + 1) * S_;
      for (int p = 0; p < S_; ++p) {
        fx[p] = lo[p];
        fx[(k_ + 1) * S_ + p] = hi[p];
      }
      const double hperp = dir == 0 ? hy : hx;
      for (int c = 0; c < kComp; ++c) {
        // g(a,p) = sum_j A_j P_a'(z_j) F_j + P_a(-1) F_lo - P_a(1) F_hi
        for (int a = 0; a < n_; ++a) {
          const double sgn = (a % 2 == 0) ? 1.0 : -1.0;
          for (int p = 0; p < S_; ++p) {
            double s = 0.0;
            for (int j = 0; j < np_; ++j) s += wd_[a * np_ + j] * fx[j * S_ + p][c];
            g[a * S_ + p] = s + sgn * lo[p][c] - hi[p][c];
          }
        }
        for (int b = 0; b < n_; ++b) {
          for (int a = 0; a < n_; ++a) {
            double s = 0.0;
            for (int p = 0; p < S_; ++p) s += y_[b * S_ + p] * g[a * S_ + p];
            s *= 0.5 * hperp;
            // dir 0: a is the x-degree; dir 1: a is the y-degree.
            const int mode = dir == 0 ? a + n_ * b : b + n_ * a;
            if (dir == 0) {
              r[c][mode] = s;
            } else {
              r[c][mode] += s;
            }
          }
        }
      }
    }
    for (int c = 0; c < kComp; ++c) {
      auto o = out.modes(cell, c);
      for (int i = 0; i < S_; ++i) o[i] = r[c][i];
    }
  }

  /// r -> (4/(hx hy)) (G^-1 (x) G^-1) r for one cell.
  void solve_cell(Field& r, int cell) const {
    const double scale = 4.0 / (mesh_.hx() * mesh_.hy());
    double tmp[(kMaxK + 1) * (kMaxK + 1)];
    for (int c = 0; c < kComp; ++c) {
      auto m = r.modes(cell, c);
      for (int b = 0; b < n_; ++b) {
        for (int a = 0; a < n_; ++a) {
          double s = 0.0;
          for (int a2 = 0; a2 < n_; ++a2) s += ginv_(a, a2) * m[a2 + n_ * b];
          tmp[a + n_ * b] = s;
        }
      }
      for (int b = 0; b < n_; ++b) {
        for (int a = 0; a < n_; ++a) {
          double s = 0.0;
          for (int b2 = 0; b2 < n_; ++b2) s += ginv_(b, b2) * tmp[a + n_ * b2];
          m[a + n_ * b] = scale * s;
        }
      }
    }
  }

  Mesh2D mesh_;
  Eq eq_;
  Boundaries2D bcs_;
  std::vector<InternalWall> walls_;
  MultiIndexOrder multi_index_ = MultiIndexOrder::Total;
  StarMassMatrix mass_;
  int k_ = 0, n_ = 1, np_ = 2, S_ = 1;
  std::vector<double> seg_pts_, seg_w_;
  std::vector<double> vn_;  // P_a(z_j), [j][a]
  std::vector<double> wd_;  // A_j P_a'(z_j), [a][j]
  std::vector<double> vs_;  // P_a(s_p), [p][a]
  std::vector<double> y_;   // (M* P_b)|_{CV(p)} w_p, [b][p]
  Eigen::MatrixXd ginv_, cv_int_;
  std::vector<bool> xwall_, ywall_;
};

}  // namespace oesv

#endif  // OESV_SV_OPERATOR_2D_HPP_
