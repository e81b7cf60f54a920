#ifndef OESV_SV_OPERATOR_1D_HPP_
#define OESV_SV_OPERATOR_1D_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <vector>

#include "oesv/basis.hpp"
#include "oesv/boundary.hpp"
#include "oesv/equations.hpp"
#include "oesv/errors.hpp"
#include "oesv/field.hpp"
#include "oesv/mesh.hpp"
#include "oesv/star_mass.hpp"

namespace oesv {

/// Spectral volume spatial operator on a 1D mesh.
///
/// The modal residual is the DG representation of the SV scheme: for every
/// test polynomial w of a cell,
///   <du/dt, w>_* = sum_j A_j w'(xi_j) fhat_j + w(-1) fhat_L - w(+1) fhat_R,
/// where fhat_j is the physical flux at interior subdivision points and the
/// numerical flux at the two cell edges. residual_cv() evaluates the original
/// control-volume balance and serves as its oracle.
template <class Eq>
class SvOperator1D {
 public:
  using Equation = Eq;
  using State = typename Eq::State;
  using Normal = typename Eq::Normal;
  static constexpr int kDim = 1;
  static constexpr int kComp = Eq::n_comp;

  SvOperator1D(Mesh1D mesh, Eq eq, Boundaries1D bcs)
      : mesh_(std::move(mesh)), eq_(eq), bcs_(std::move(bcs)), mass_(mesh_.rule()) {
    bcs_.validate();
    const auto& rule = mesh_.rule();
    const int k = rule.k, n = k + 1, np = k + 2;
    value_ = Eigen::MatrixXd(np, n);
    wderiv_ = Eigen::MatrixXd(n, np);
    for (int j = 0; j < np; ++j) {
      for (int m = 0; m < n; ++m) {
        value_(j, m) = legendre(m, rule.nodes[j]);
        wderiv_(m, j) = rule.weights[j] * legendre_deriv(m, rule.nodes[j]);
      }
    }
    cv_int_ = cv_integral_table(rule);
  }

  const Mesh1D& mesh() const { return mesh_; }
  const Eq& equation() const { return eq_; }
  const Boundaries1D& boundaries() const { return bcs_; }
  const StarMassMatrix& star_mass() const { return mass_; }
  const SubdivisionRule& rule() const { return mesh_.rule(); }
  int k() const { return mesh_.k(); }
  int num_cells() const { return mesh_.num_cells(); }
  bool periodic() const { return bcs_.periodic(); }

  Field make_field() const { return Field(1, k(), num_cells(), kComp); }

  State eval(const Field& u, int cell, double xi) const {
    State s{};
    for (int c = 0; c < kComp; ++c) {
      const auto m = u.modes(cell, c);
      double v = 0.0;
      for (int l = 0; l <= k(); ++l) v += m[l] * legendre(l, xi);
      s[c] = v;
    }
    return s;
  }
  State average(const Field& u, int cell) const {
    State s{};
    for (int c = 0; c < kComp; ++c) s[c] = u(cell, c, 0);
    return s;
  }

  /// Numerical fluxes at the N+1 mesh edges (edge i is x_{i-1/2}).
  std::vector<State> interface_fluxes(const Field& u, double t) const {
    const int nc = num_cells();
    std::vector<State> f(nc + 1);
    const Normal n{1.0};
    for (int i = 1; i < nc; ++i) {
      f[i] = flux_with_context(trace(u, i - 1, k() + 1), trace(u, i, 0), n, i);
    }
    const State left_in = trace(u, 0, 0), right_in = trace(u, nc - 1, k() + 1);
    if (periodic()) {
      f[0] = f[nc] = flux_with_context(right_in, left_in, n, 0);
    } else {
      const State ghost_l =
          exterior_state(eq_, bcs_.left, left_in, right_in, mesh_.a(), 0.0, t, Normal{-1.0});
      const State ghost_r =
          exterior_state(eq_, bcs_.right, right_in, left_in, mesh_.b(), 0.0, t, Normal{1.0});
      f[0] = flux_with_context(ghost_l, left_in, n, 0);
      f[nc] = flux_with_context(right_in, ghost_r, n, nc - 1);
    }
    return f;
  }

  /// Right-hand side r_m of the DG representation, before the star-mass
  /// solve. Its dot product with the coefficients of w is H(u, w) for
  /// linear advection.
  Field residual_rhs(const Field& u, double t) const {
    Field r = make_field();
    const auto fhat = interface_fluxes(u, t);
    const int k = this->k(), n = k + 1;
    std::vector<State> fj(k + 2);
    for (int i = 0; i < num_cells(); ++i) {
      fj[0] = fhat[i];
      fj[k + 1] = fhat[i + 1];
      for (int j = 1; j <= k; ++j) {
        const State s = trace(u, i, j);
        check_with_context(s, i);
        fj[j] = eq_.flux(s, 0);
      }
      for (int c = 0; c < kComp; ++c) {
        auto out = r.modes(i, c);
        for (int m = 0; m < n; ++m) {
          double acc = 0.0;
          for (int j = 0; j < k + 2; ++j) acc += wderiv_(m, j) * fj[j][c];
          const double left_sign = (m % 2 == 0) ? 1.0 : -1.0;
          out[m] = acc + left_sign * fhat[i][c] - fhat[i + 1][c];
        }
      }
    }
    return r;
  }

  /// Modal residual du/dt = L(u).
  void residual(const Field& u, double t, Field& du) const {
    du = residual_rhs(u, t);
    solve_star_mass(du);
  }
  Field residual(const Field& u, double t) const {
    Field du;
    residual(u, t, du);
    return du;
  }

  /// In-place solve G(h) x = r cell by cell.
  void solve_star_mass(Field& r) const {
    const int n = k() + 1;
    const auto& inv = mass_.reference_inverse();
    std::vector<double> tmp(n);
    for (int i = 0; i < num_cells(); ++i) {
      const double scale = 2.0 / mesh_.h(i);
      for (int c = 0; c < kComp; ++c) {
        auto m = r.modes(i, c);
        for (int a = 0; a < n; ++a) {
          double s = 0.0;
          for (int b = 0; b < n; ++b) s += inv(a, b) * m[b];
          tmp[a] = scale * s;
        }
        std::copy(tmp.begin(), tmp.end(), m.begin());
      }
    }
  }

  /// Control-volume form: d/dt int_{CV_j} u for every cell, component and
  /// CV, laid out [cell][comp][cv].
  std::vector<double> residual_cv(const Field& u, double t) const {
    const int k = this->k(), n = k + 1;
    std::vector<double> out(static_cast<std::size_t>(num_cells()) * kComp * n);
    const auto fhat = interface_fluxes(u, t);
    std::vector<State> fj(k + 2);
    for (int i = 0; i < num_cells(); ++i) {
      fj[0] = fhat[i];
      fj[k + 1] = fhat[i + 1];
      for (int j = 1; j <= k; ++j) fj[j] = eq_.flux(trace(u, i, j), 0);
      for (int c = 0; c < kComp; ++c) {
        for (int j = 0; j < n; ++j) {
          out[(static_cast<std::size_t>(i) * kComp + c) * n + j] = fj[j][c] - fj[j + 1][c];
        }
      }
    }
    return out;
  }

  /// int_{CV_j} v for a modal field v, laid out like residual_cv().
  std::vector<double> cv_integrals(const Field& v) const {
    const int n = k() + 1;
    std::vector<double> out(static_cast<std::size_t>(num_cells()) * kComp * n);
    for (int i = 0; i < num_cells(); ++i) {
      for (int c = 0; c < kComp; ++c) {
        const auto m = v.modes(i, c);
        for (int j = 0; j < n; ++j) {
          double s = 0.0;
          for (int a = 0; a < n; ++a) s += cv_int_(j, a) * m[a];
          out[(static_cast<std::size_t>(i) * kComp + c) * n + j] = 0.5 * mesh_.h(i) * s;
        }
      }
    }
    return out;
  }

  /// max over cells of lambda(u_bar) / h; the CFL step is tau = CFL / rate.
  double max_rate(const Field& u) const {
    double r = 0.0;
    for (int i = 0; i < num_cells(); ++i) {
      const State s = average(u, i);
      check_with_context(s, i);
      r = std::max(r, eq_.max_speed(s, 0) / mesh_.h(i));
    }
    return r;
  }

  /// Physical trace of the solution at subdivision node j of a cell.
  State trace(const Field& u, int cell, int j) const {
    State s{};
    for (int c = 0; c < kComp; ++c) {
      const auto m = u.modes(cell, c);
      double v = 0.0;
      for (int l = 0; l <= k(); ++l) v += value_(j, l) * m[l];
      s[c] = v;
    }
    return s;
  }

  /// Checks every state the residual would touch (nodes and edges).
  void check_physical(const Field& u) const {
    for (int i = 0; i < num_cells(); ++i) {
      for (int j = 0; j < k() + 2; ++j) check_with_context(trace(u, i, j), i);
    }
  }

 private:
  State flux_with_context(const State& um, const State& up, const Normal& n, int cell) const {
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

  Mesh1D mesh_;
  Eq eq_;
  Boundaries1D bcs_;
  StarMassMatrix mass_;
  Eigen::MatrixXd value_;   // P_m(xi_j), (k+2) x (k+1)
  Eigen::MatrixXd wderiv_;  // A_j P_m'(xi_j), (k+1) x (k+2)
  Eigen::MatrixXd cv_int_;  // int_{CV_j} P_m, (k+1) x (k+1)
};

/// H(v, w): the modal residual of v tested against w, summed over cells.
template <class Eq>
double bilinear_form(const SvOperator1D<Eq>& op, const Field& v, const Field& w, double t = 0.0) {
  const Field r = op.residual_rhs(v, t);
  double h = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) h += w.data()[i] * r.data()[i];
  return h;
}

/// D*v, defined by <D*v, w>_* = tau H(v, w) for all w.
template <class Eq>
Field temporal_difference(const SvOperator1D<Eq>& op, const Field& v, double tau) {
  Field d = op.residual(v, 0.0);
  d *= tau;
  return d;
}

}  // namespace oesv

#endif  // OESV_SV_OPERATOR_1D_HPP_
