#include "oesv/verification.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "json.hpp"
#include "oesv/basis.hpp"
#include "oesv/equations.hpp"
#include "oesv/mesh.hpp"
#include "oesv/norms.hpp"
#include "oesv/oe_filter.hpp"
#include "oesv/star_mass.hpp"
#include "oesv/sv_operator_1d.hpp"
#include "oesv/sv_operator_2d.hpp"
#include "oesv/time_integration.hpp"

namespace oesv {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string matrix_text(const Eigen::MatrixXd& m) {
  std::ostringstream os;
  os.precision(17);
  os << m.format(Eigen::IOFormat(Eigen::FullPrecision, 0, ", ", "; ", "", "", "[", "]"));
  return os.str();
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

CheckResult at_most(std::string name, double value, double tol, std::string detail = {}) {
  return {std::move(name), value <= tol, false, value, tol, std::move(detail)};
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b, double& scale) {
  double d = 0.0;
  scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(a[i]));
  }
  return d;
}

/// Smooth positive Euler state: constant background plus small modal noise
/// decaying with the degree.
Field euler_field(int dim, int k, int cells, std::uint64_t seed) {
  const int nc = dim == 1 ? 3 : 4;
  Field u = random_field(dim, k, cells, nc, seed);
  for (int i = 0; i < cells; ++i) {
    for (int c = 0; c < nc; ++c) {
      for (int m = 0; m < u.num_modes(); ++m) {
        const int deg = dim == 1 ? m : std::max(m % (k + 1), m / (k + 1));
        u(i, c, m) *= 0.02 / (1.0 + deg);
      }
    }
    u(i, 0, 0) += 1.0;
    u(i, 1, 0) += 0.2;
    if (dim == 2) u(i, 2, 0) -= 0.1;
    u(i, nc - 1, 0) += 2.5;
  }
  return u;
}

template <class Op>
double cv_discrepancy(const Op& op, const Field& u, double& scale) {
  const auto cv = op.residual_cv(u, 0.0);
  const auto modal = op.cv_integrals(op.residual(u, 0.0));
  return max_abs_diff(cv, modal, scale);
}

/// Exact-integration DG form for periodic u_t + u_x = 0 with upwind fluxes:
/// sum_i int v w_x - v(x_{i+1/2}^-) w(x_{i+1/2}^-) + v(x_{i-1/2}^-) w(x_{i-1/2}^+).
double dg_bilinear_exact(const Mesh1D& mesh, const Field& v, const Field& w, double& scale) {
  const int k = v.k(), n = mesh.num_cells();
  const auto g = gauss_rule(k + 2);
  auto val = [&](const Field& f, int i, double xi) {
    double s = 0.0;
    for (int l = 0; l <= k; ++l) s += f(i, 0, l) * legendre(l, xi);
    return s;
  };
  auto der = [&](const Field& f, int i, double xi) {
    double s = 0.0;
    for (int l = 0; l <= k; ++l) s += f(i, 0, l) * legendre_deriv(l, xi);
    return s;
  };
  double h = 0.0;
  scale = 0.0;
  for (int i = 0; i < n; ++i) {
    double vol = 0.0;
    for (std::size_t q = 0; q < g.nodes.size(); ++q) {
      vol += g.weights[q] * val(v, i, g.nodes[q]) * der(w, i, g.nodes[q]);
    }
    const int im = (i + n - 1) % n;
    const double out = val(v, i, 1.0) * val(w, i, 1.0);
    const double in = val(v, im, 1.0) * val(w, i, -1.0);
    h += vol - out + in;
    scale += std::abs(vol) + std::abs(out) + std::abs(in);
  }
  return h;
}

std::vector<double> star_energy_history(const SvOperator1D<Advection1D>& op, Field u,
                                        const RKScheme& s, double tau, int steps) {
  std::vector<double> e{star_norm(op.mesh(), u)};
  for (int n = 0; n < steps; ++n) {
    step_rksv(op, u, s, tau, n * tau);
    e.push_back(star_norm(op.mesh(), u));
  }
  return e;
}

}  // namespace

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.skipped && !c.passed) return false;
  }
  return true;
}

Field random_field(int dim, int k, int num_cells, int num_comp, std::uint64_t seed) {
  Field u(dim, k, num_cells, num_comp);
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (double& x : u.data()) x = nd(gen);
  return u;
}

VerificationReport verify_inner_product(const SubdivisionRule& rule, int trials,
                                        std::uint64_t seed) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.name = "inner_product/" + to_string(rule.family) + "/k=" + std::to_string(rule.k);
  const Eigen::MatrixXd g = star_gram_reference(rule);
  const double scale = g.cwiseAbs().maxCoeff();
  const double asym = (g - g.transpose()).cwiseAbs().maxCoeff();
  rep.add(at_most("symmetry", asym, 1e-12 * scale,
                  asym <= 1e-12 * scale ? "" : "G_ref = " + matrix_text(g)));

  const Eigen::MatrixXd sym = 0.5 * (g + g.transpose());
  const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sym).eigenvalues().minCoeff();
  CheckResult pd{"positive_definite", lmin > 1e-12 * scale, false, lmin, 1e-12 * scale,
                 "minimum eigenvalue of the symmetric part"};
  if (!pd.passed) pd.detail += "; G_ref = " + matrix_text(g);
  rep.add(pd);

  const int k = rule.k, n = k + 1;
  if (k >= 1) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
      Eigen::VectorXd v(n), w(n);
      for (int m = 0; m < n; ++m) v[m] = nd(gen);
      for (int m = 0; m < n; ++m) w[m] = m < k ? nd(gen) : 0.0;
      double l2 = 0.0;
      for (int m = 0; m < n; ++m) l2 += 2.0 / (2 * m + 1) * v[m] * w[m];
      const double s = scale * v.norm() * w.norm();
      worst = std::max(worst, std::abs(v.dot(g * w) - l2) / s);
      worst = std::max(worst, std::abs(w.dot(g * v) - l2) / s);
    }
    rep.add(at_most("l2_agreement_low_degree", worst, 1e-12,
                    "relative |<v,w>_* - (v,w)| with deg w <= k-1"));
  }
  const double margin = rule.positivity_margin();
  rep.add({"positivity_margin", margin > 0.0, false, margin, 0.0, "must be positive"});
  rep.seconds = seconds_since(t0);
  return rep;
}

VerificationReport verify_dg_equivalence(int n, const SubdivisionRule& rule, EquationKind eq,
                                         int trials, std::uint64_t seed) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.name = "dg_equivalence/" + to_string(eq) + "/" + to_string(rule.family) +
             "/k=" + std::to_string(rule.k) + "/N=" + std::to_string(n);
  const int k = rule.k;
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + 7919ull * t;
    double d = 0.0, scale = 0.0;
    switch (eq) {
      case EquationKind::Advection1D: {
        SvOperator1D<Advection1D> op(build_mesh_1d(0, 1, n, rule, 0.2, s), Advection1D{}, {});
        d = cv_discrepancy(op, random_field(1, k, n, 1, s), scale);
        break;
      }
      case EquationKind::Euler1D: {
        SvOperator1D<Euler1D> op(build_mesh_1d(0, 1, n, rule, 0.2, s), Euler1D{}, {});
        d = cv_discrepancy(op, euler_field(1, k, n, s), scale);
        break;
      }
      case EquationKind::Advection2D: {
        SvOperator2D<Advection2D> op(build_mesh_2d({0, 1, 0, 1}, n, n, rule),
                                     Advection2D{1.0, -0.6}, {});
        d = cv_discrepancy(op, random_field(2, k, n * n, 1, s), scale);
        break;
      }
      case EquationKind::Euler2D: {
        SvOperator2D<Euler2D> op(build_mesh_2d({0, 1, 0, 1}, n, n, rule), Euler2D{}, {});
        d = cv_discrepancy(op, euler_field(2, k, n * n, s), scale);
        break;
      }
    }
    worst = std::max(worst, scale > 0.0 ? d / scale : d);
  }
  rep.add(at_most("cv_vs_modal", worst, 1e-12, "max relative CV rate discrepancy"));

  if (eq == EquationKind::Advection1D) {
    if (!rule.upwind()) {
      rep.add({"dg_bilinear_exact", false, true, 0.0, 1e-12,
               "skipped: rule has A_0 != 0 (upwind condition fails)"});
    } else {
      double worst_h = 0.0;
      for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = seed + 104729ull * t;
        const Mesh1D mesh = build_mesh_1d(0, 1, n, rule, 0.2, s);
        SvOperator1D<Advection1D> op(mesh, Advection1D{}, {});
        const Field v = random_field(1, k, n, 1, s);
        const Field w = random_field(1, k, n, 1, s + 1);
        double scale = 0.0;
        const double exact = dg_bilinear_exact(mesh, v, w, scale);
        worst_h = std::max(worst_h, std::abs(bilinear_form(op, v, w) - exact) / scale);
      }
      rep.add(at_most("dg_bilinear_exact", worst_h, 1e-12,
                      "relative |H_sv(v,w) - H_dg(v,w)| for v, w in V^k"));
    }
  }
  rep.seconds = seconds_since(t0);
  return rep;
}

VerificationReport verify_dg_equivalence(int n, int k, EquationKind eq, int trials,
                                         std::uint64_t seed) {
  return verify_dg_equivalence(n, make_rule(k, SubdivisionFamily::Gauss), eq, trials, seed);
}

VerificationReport verify_energy(int n, int k, const std::string& scheme, int steps,
                                 std::uint64_t seed, int trials) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.name = "energy/k=" + std::to_string(k) + "/N=" + std::to_string(n) + "/" + scheme;
  const SubdivisionRule rule = make_rule(k, SubdivisionFamily::Gauss);
  const Mesh1D mesh = build_mesh_1d(0, 1, n, rule);
  SvOperator1D<Advection1D> op(mesh, Advection1D{}, {});
  const double cfl = 1.0 / (2 * k + 1);
  const double tau = cfl * mesh.h(0);

  double worst_id = 0.0, worst_skew = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Field u = random_field(1, k, n, 1, seed + 31ull * t);
    const double j2 = jump_inner(mesh, u, u);
    worst_id = std::max(worst_id,
                        std::abs(bilinear_form(op, u, u) + 0.5 * j2) / std::max(1.0, j2));
    const Field w = random_field(1, k, n, 1, seed + 31ull * t + 17);
    const Field dv = temporal_difference(op, u, tau);
    const Field dw = temporal_difference(op, w, tau);
    const double a = star_inner(mesh, dv, w), b = star_inner(mesh, u, dw);
    const double c = tau * jump_inner(mesh, u, w);
    const double scale = std::max(1.0, std::abs(a) + std::abs(b) + std::abs(c));
    worst_skew = std::max(worst_skew, std::abs(a + b + c) / scale);
  }
  rep.add(at_most("energy_identity", worst_id, 1e-12, "|H(u,u) + [[u]]^2/2| on random fields"));
  rep.add(at_most("dstar_skew_symmetry", worst_skew, 1e-12,
                  "|<D*v,w>_* + <v,D*w>_* + tau([[v]],[[w]])| on random pairs"));

  const RKScheme s = builtin_scheme(scheme);
  const Field u0 = random_field(1, k, n, 1, seed + 99991);
  const auto e = star_energy_history(op, u0, s, tau, steps);
  int first_bad = -1;
  double worst_growth = 0.0;
  for (int i = 1; i < static_cast<int>(e.size()); ++i) {
    const double g = (e[i] - e[i - 1]) / e[i - 1];
    worst_growth = std::max(worst_growth, g);
    if (g > 1e-13 && first_bad < 0) first_bad = i;
  }
  std::string detail = "max relative per-step growth of the star norm";
  if (first_bad >= 0) {
    detail += "; first violation at step " + std::to_string(first_bad) + ": " +
              num(e[first_bad - 1]) + " -> " + num(e[first_bad]);
  }
  rep.add(at_most("monotone_star_norm", worst_growth, 1e-13, detail));

  double worst_filter = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Field v = random_field(1, k, n, 1, seed + 7ull * t + 5);
    const double nv = star_norm(mesh, v);
    for (double ft : {1e-3, tau, 1.0}) {
      const double nf = star_norm(mesh, filtered(op, v, ft));
      worst_filter = std::max(worst_filter, (nf - nv) / nv);
    }
  }
  rep.add(at_most("filter_non_expansion", worst_filter, 1e-14,
                  "max relative (||F v||_* - ||v||_*) over random fields and tau"));

  SvOperator1D<Advection1D> down(mesh, Advection1D{1.0, true}, {});
  const auto ed = star_energy_history(down, u0, s, tau, std::min(steps, 50));
  const double growth = ed.back() / ed.front();
  rep.add({"downwind_negative_control", growth > 1.0 + 1e-6, false, growth, 1.0 + 1e-6,
           "star norm ratio after " + std::to_string(ed.size() - 1) +
               " downwind steps (must grow)"});
  rep.seconds = seconds_since(t0);
  return rep;
}

std::vector<VerificationReport> run_verify_suite(std::uint64_t seed) {
  std::vector<VerificationReport> out;
  for (auto fam : {SubdivisionFamily::Gauss, SubdivisionFamily::RightRadau}) {
    for (int k = 1; k <= 3; ++k) out.push_back(verify_inner_product(make_rule(k, fam), 100, seed));
  }
  out.push_back(verify_inner_product(make_rule(2, SubdivisionFamily::ParamC, 0.25), 100, seed));

  {
    const auto t0 = Clock::now();
    SubdivisionRule bad = make_rule(2, SubdivisionFamily::Gauss);
    bad.weights[1] += 0.05;
    bad.weights[2] -= 0.05;
    bad = SubdivisionRule::from_weights(bad.k, bad.nodes, bad.weights);
    const auto r = verify_inner_product(bad, 10, seed);
    VerificationReport neg;
    neg.name = "inner_product/negative_control_corrupted_weights";
    const auto& sym = r.checks.front();
    neg.add({"symmetry_failure_detected", !sym.passed, false, sym.value, sym.tolerance,
             sym.passed ? "corrupted rule was not flagged" : "flagged: " + sym.detail});
    neg.seconds = seconds_since(t0);
    out.push_back(neg);
  }

  out.push_back(verify_dg_equivalence(16, 2, EquationKind::Advection1D, 100, seed));
  out.push_back(verify_dg_equivalence(16, 1, EquationKind::Advection1D, 20, seed));
  out.push_back(verify_dg_equivalence(16, 3, EquationKind::Advection1D, 20, seed));
  out.push_back(verify_dg_equivalence(16, make_rule(2, SubdivisionFamily::RightRadau),
                                      EquationKind::Advection1D, 20, seed));
  out.push_back(verify_dg_equivalence(16, 2, EquationKind::Euler1D, 20, seed));
  out.push_back(verify_dg_equivalence(8, 2, EquationKind::Advection2D, 10, seed));
  out.push_back(verify_dg_equivalence(8, 2, EquationKind::Euler2D, 10, seed));
  // Simpson weights on {-1, 0, 1}: exact to degree 3 but A_0 != 0.
  out.push_back(verify_dg_equivalence(
      16, SubdivisionRule::from_weights(1, {-1.0, 0.0, 1.0}, {1.0 / 3, 4.0 / 3, 1.0 / 3}),
      EquationKind::Advection1D, 20, seed));

  out.push_back(verify_energy(64, 1, "SSPRK3", 200, seed, 100));
  return out;
}

std::string reports_json(const std::vector<VerificationReport>& reports) {
  using nlohmann::ordered_json;
  ordered_json j;
  bool all = true;
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    all = all && r.passed();
    ordered_json jr;
    jr["name"] = r.name;
    jr["passed"] = r.passed();
    jr["seconds"] = r.seconds;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name},
                        {"status", c.skipped ? "skipped" : (c.passed ? "pass" : "fail")},
                        {"value", c.value},
                        {"tolerance", c.tolerance},
                        {"detail", c.detail}});
    }
    jr["checks"] = checks;
    arr.push_back(jr);
  }
  j["passed"] = all;
  j["reports"] = arr;
  return j.dump(2);
}

std::string reports_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      os << (c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL")) << "  " << r.name << " : "
         << c.name << "  value=" << num(c.value) << " tol=" << num(c.tolerance);
      if (!c.detail.empty() && (!c.passed || c.skipped)) os << "  (" << c.detail << ")";
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace oesv
