#include "oesv/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "oesv/basis.hpp"
#include "oesv/errors.hpp"

namespace oesv {

ErrorNorms error_norms(const Mesh1D& mesh, const Field& u, int comp,
                       const std::function<double(double)>& exact) {
  const int k = mesh.k();
  const auto g = gauss_rule(k + 2);
  ErrorNorms e;
  double l2 = 0.0;
  for (int i = 0; i < mesh.num_cells(); ++i) {
    const auto m = u.modes(i, comp);
    for (int q = 0; q < g.size(); ++q) {
      double v = 0.0;
      for (int l = 0; l <= k; ++l) v += m[l] * legendre(l, g.nodes[q]);
      const double d = std::abs(v - exact(mesh.to_physical(i, g.nodes[q])));
      const double w = 0.5 * mesh.h(i) * g.weights[q];
      e.l1 += w * d;
      l2 += w * d * d;
      e.linf = std::max(e.linf, d);
    }
  }
  e.l2 = std::sqrt(l2);
  return e;
}

ErrorNorms error_norms(const Mesh2D& mesh, const Field& u, int comp,
                       const std::function<double(double, double)>& exact) {
  const int k = mesh.k(), n = k + 1;
  const auto g = gauss_rule(k + 2);
  const int nq = g.size();
  std::vector<double> pl(nq * n);
  for (int q = 0; q < nq; ++q)
    for (int l = 0; l < n; ++l) pl[q * n + l] = legendre(l, g.nodes[q]);
  ErrorNorms e;
  double l2 = 0.0;
  const double jac = 0.25 * mesh.hx() * mesh.hy();
  for (int iy = 0; iy < mesh.ny(); ++iy) {
    for (int ix = 0; ix < mesh.nx(); ++ix) {
      const auto m = u.modes(mesh.index(ix, iy), comp);
      for (int qy = 0; qy < nq; ++qy) {
        for (int qx = 0; qx < nq; ++qx) {
          double v = 0.0;
          for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a) v += m[a + n * b] * pl[qx * n + a] * pl[qy * n + b];
          const double d =
              std::abs(v - exact(mesh.x_of(ix, g.nodes[qx]), mesh.y_of(iy, g.nodes[qy])));
          const double w = jac * g.weights[qx] * g.weights[qy];
          e.l1 += w * d;
          l2 += w * d * d;
          e.linf = std::max(e.linf, d);
        }
      }
    }
  }
  e.l2 = std::sqrt(l2);
  return e;
}

void ConvergenceTable::add(std::string mesh, long cells, ErrorNorms err) {
  ConvergenceRow row{std::move(mesh), cells, err, false, {}};
  if (!rows_.empty()) {
    const auto& p = rows_.back().err;
    row.has_rate = true;
    row.rate.l1 = std::log2(p.l1 / err.l1);
    row.rate.l2 = std::log2(p.l2 / err.l2);
    row.rate.linf = std::log2(p.linf / err.linf);
  }
  rows_.push_back(std::move(row));
}

void ConvergenceTable::write_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << std::setprecision(17);
  out << "mesh,cells,l1,l1_rate,l2,l2_rate,linf,linf_rate\n";
  for (const auto& r : rows_) {
    out << r.mesh << ',' << r.cells << ',' << r.err.l1 << ',';
    if (r.has_rate) out << r.rate.l1;
    out << ',' << r.err.l2 << ',';
    if (r.has_rate) out << r.rate.l2;
    out << ',' << r.err.linf << ',';
    if (r.has_rate) out << r.rate.linf;
    out << '\n';
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string ConvergenceTable::to_text() const {
  std::ostringstream os;
  os << std::left << std::setw(12) << "mesh" << std::setw(13) << "L1" << std::setw(7) << "rate"
     << std::setw(13) << "L2" << std::setw(7) << "rate" << std::setw(13) << "Linf" << "rate\n";
  for (const auto& r : rows_) {
    auto rate = [&](double v) {
      std::ostringstream s;
      if (r.has_rate) s << std::fixed << std::setprecision(2) << v;
      else s << "-";
      return s.str();
    };
    os << std::setw(12) << r.mesh << std::scientific << std::setprecision(3) << std::setw(13)
       << r.err.l1 << std::setw(7) << rate(r.rate.l1) << std::setw(13) << r.err.l2
       << std::setw(7) << rate(r.rate.l2) << std::setw(13) << r.err.linf << rate(r.rate.linf)
       << '\n';
  }
  return os.str();
}

double average_residue(const Field& prev, const Field& next, double tau) {
  double s = 0.0;
  for (int i = 0; i < prev.num_cells(); ++i)
    for (int c = 0; c < prev.num_comp(); ++c) s += std::abs(next(i, c, 0) - prev(i, c, 0)) / tau;
  return s / (static_cast<double>(prev.num_comp()) * prev.num_cells());
}

std::array<double, 2> nodal_range(const Field& u, int comp) {
  const int k = u.k(), n = k + 1;
  const auto g = gauss_rule(n);
  std::vector<double> pl(n * n);
  for (int q = 0; q < n; ++q)
    for (int l = 0; l < n; ++l) pl[q * n + l] = legendre(l, g.nodes[q]);
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int i = 0; i < u.num_cells(); ++i) {
    const auto m = u.modes(i, comp);
    if (u.dim() == 1) {
      for (int q = 0; q < n; ++q) {
        double v = 0.0;
        for (int l = 0; l < n; ++l) v += m[l] * pl[q * n + l];
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    } else {
      for (int qy = 0; qy < n; ++qy)
        for (int qx = 0; qx < n; ++qx) {
          double v = 0.0;
          for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a) v += m[a + n * b] * pl[qx * n + a] * pl[qy * n + b];
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
    }
  }
  return {lo, hi};
}

Overshoot overshoot_metric(const Field& u, int comp, double lo, double hi) {
  const auto r = nodal_range(u, comp);
  return {std::max(lo - r[0], 0.0), std::max(r[1] - hi, 0.0)};
}

RiemannSolver::RiemannSolver(std::array<double, 3> left, std::array<double, 3> right,
                             double gamma)
    : l_(left), r_(right), g_(gamma) {
  cl_ = std::sqrt(g_ * l_[2] / l_[0]);
  cr_ = std::sqrt(g_ * r_[2] / r_[0]);
  if (2.0 * (cl_ + cr_) / (g_ - 1.0) <= r_[1] - l_[1]) {
    throw ValidationError("Riemann data generates vacuum");
  }
  // Newton iteration on f_L(p) + f_R(p) + (u_R - u_L) = 0 from the
  // two-rarefaction guess.
  const double z = (g_ - 1.0) / (2.0 * g_);
  double p = std::pow((cl_ + cr_ - 0.5 * (g_ - 1.0) * (r_[1] - l_[1])) /
                          (cl_ / std::pow(l_[2], z) + cr_ / std::pow(r_[2], z)),
                      1.0 / z);
  p = std::max(p, 1e-12);
  for (int it = 0; it < 100; ++it) {
    double dl, dr;
    const double f = f_side(p, l_, cl_, dl) + f_side(p, r_, cr_, dr) + r_[1] - l_[1];
    double pn = p - f / (dl + dr);
    if (pn < 0.0) pn = 0.1 * p;
    const double change = 2.0 * std::abs(pn - p) / (pn + p);
    p = pn;
    if (change < 1e-15) break;
  }
  p_star_ = p;
  double dl, dr;
  u_star_ = 0.5 * (l_[1] + r_[1]) + 0.5 * (f_side(p, r_, cr_, dr) - f_side(p, l_, cl_, dl));
}

double RiemannSolver::f_side(double p, const std::array<double, 3>& w, double c,
                             double& df) const {
  const double rho = w[0], pk = w[2];
  if (p > pk) {
    const double a = 2.0 / ((g_ + 1.0) * rho), b = (g_ - 1.0) / (g_ + 1.0) * pk;
    const double q = std::sqrt(a / (p + b));
    df = q * (1.0 - 0.5 * (p - pk) / (b + p));
    return (p - pk) * q;
  }
  const double pr = p / pk;
  df = 1.0 / (rho * c) * std::pow(pr, -(g_ + 1.0) / (2.0 * g_));
  return 2.0 * c / (g_ - 1.0) * (std::pow(pr, (g_ - 1.0) / (2.0 * g_)) - 1.0);
}

std::array<double, 3> RiemannSolver::sample(double s) const {
  const double g = g_, ps = p_star_, us = u_star_;
  const double gm = (g - 1.0) / (g + 1.0);
  if (s <= us) {
    const double rho = l_[0], u = l_[1], p = l_[2], c = cl_;
    if (ps > p) {
      const double sh = u - c * std::sqrt((g + 1.0) / (2.0 * g) * ps / p + (g - 1.0) / (2.0 * g));
      if (s <= sh) return l_;
      return {rho * (ps / p + gm) / (gm * ps / p + 1.0), us, ps};
    }
    const double head = u - c;
    const double cs = c * std::pow(ps / p, (g - 1.0) / (2.0 * g));
    const double tail = us - cs;
    if (s <= head) return l_;
    if (s >= tail) return {rho * std::pow(ps / p, 1.0 / g), us, ps};
    const double uf = 2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * u + s);
    const double cf = 2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * (u - s));
    const double rf = rho * std::pow(cf / c, 2.0 / (g - 1.0));
    return {rf, uf, p * std::pow(cf / c, 2.0 * g / (g - 1.0))};
  }
  const double rho = r_[0], u = r_[1], p = r_[2], c = cr_;
  if (ps > p) {
    const double sh = u + c * std::sqrt((g + 1.0) / (2.0 * g) * ps / p + (g - 1.0) / (2.0 * g));
    if (s >= sh) return r_;
    return {rho * (ps / p + gm) / (gm * ps / p + 1.0), us, ps};
  }
  const double head = u + c;
  const double cs = c * std::pow(ps / p, (g - 1.0) / (2.0 * g));
  const double tail = us + cs;
  if (s >= head) return r_;
  if (s <= tail) return {rho * std::pow(ps / p, 1.0 / g), us, ps};
  const double uf = 2.0 / (g + 1.0) * (-c + 0.5 * (g - 1.0) * u + s);
  const double cf = 2.0 / (g + 1.0) * (c - 0.5 * (g - 1.0) * (u - s));
  const double rf = rho * std::pow(cf / c, 2.0 / (g - 1.0));
  return {rf, uf, p * std::pow(cf / c, 2.0 * g / (g - 1.0))};
}

std::array<double, 2> RiemannSolver::density_range() const {
  // Density is monotone inside rarefaction fans, so the extremes are among
  // the four constant states.
  const double far = 1e6;
  const double eps = 1e-9;
  const double vals[4] = {sample(-far)[0], sample(u_star_ - eps)[0], sample(u_star_ + eps)[0],
                          sample(far)[0]};
  return {*std::min_element(vals, vals + 4), *std::max_element(vals, vals + 4)};
}

}  // namespace oesv
