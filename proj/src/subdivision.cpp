#include "oesv/subdivision.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "oesv/basis.hpp"
#include "oesv/errors.hpp"

namespace oesv {

std::string to_string(SubdivisionFamily family) {
  switch (family) {
    case SubdivisionFamily::Gauss: return "gauss";
    case SubdivisionFamily::RightRadau: return "right_radau";
    case SubdivisionFamily::ParamC: return "param_c";
  }
  return "?";
}

SubdivisionFamily parse_family(const std::string& name) {
  if (name == "gauss") return SubdivisionFamily::Gauss;
  if (name == "right_radau" || name == "radau") return SubdivisionFamily::RightRadau;
  if (name == "param_c" || name == "paramc") return SubdivisionFamily::ParamC;
  throw ValidationError("unknown subdivision family '" + name +
                        "' (expected gauss, right_radau, param_c)");
}

namespace {

constexpr int kScanIntervals = 64;
constexpr double kRootTol = 1e-14;

// Zeros of f in (-1, 1): sign-change scan followed by safeguarded Newton.
std::vector<double> find_roots(const std::function<double(double)>& f,
                               const std::function<double(double)>& df) {
  std::vector<double> roots;
  double a = -1.0, fa = f(a);
  for (int s = 1; s <= kScanIntervals; ++s) {
    const double b = -1.0 + 2.0 * s / kScanIntervals;
    const double fb = f(b);
    if (fa == 0.0 && a > -1.0) {
      roots.push_back(a);
    } else if (fa * fb < 0.0) {
      double lo = a, hi = b, flo = fa;
      double x = 0.5 * (lo + hi);
      for (int it = 0; it < 200; ++it) {
        const double fx = f(x);
        if (fx == 0.0) break;
        if ((fx < 0.0) == (flo < 0.0)) {
          lo = x;
          flo = fx;
        } else {
          hi = x;
        }
        const double d = df(x);
        double xn = d != 0.0 ? x - fx / d : 0.5 * (lo + hi);
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        const double step = std::abs(xn - x);
        x = xn;
        if (step < kRootTol || hi - lo < kRootTol) break;
      }
      // Newton polish to full precision once inside the tolerance band.
      for (int it = 0; it < 3; ++it) {
        const double d = df(x);
        if (d == 0.0) break;
        const double xn = x - f(x) / d;
        if (!(std::abs(xn - x) < 10.0 * kRootTol)) break;
        x = xn;
      }
      roots.push_back(x);
    }
    a = b;
    fa = fb;
  }
  return roots;
}

}  // namespace

std::vector<double> subdivision_nodes(int k, SubdivisionFamily family, double c) {
  if (k < 1) throw std::invalid_argument("subdivision_nodes: k must be >= 1");
  std::function<double(double)> f, df;
  switch (family) {
    case SubdivisionFamily::ParamC:
      if (!(c < 1.0)) {
        throw NonDistinctRoots("subdivision_nodes: ParamC requires c < 1");
      }
      if (c != 0.0) {
        const double s = c / (k * (1.0 - c));
        f = [k, s](double x) {
          return legendre(k, x) + s * (x + 1.0) * legendre_deriv(k, x);
        };
        df = [k, s](double x) {
          return (1.0 + s) * legendre_deriv(k, x) +
                 s * (x + 1.0) * legendre_deriv_order(k, 2, x);
        };
        break;
      }
      [[fallthrough]];
    case SubdivisionFamily::Gauss:
      f = [k](double x) { return legendre(k, x); };
      df = [k](double x) { return legendre_deriv(k, x); };
      break;
    case SubdivisionFamily::RightRadau: {
      // q = (P_k - P_{k+1}) / (1 - xi); q(1) = k + 1.
      f = [k](double x) {
        if (x >= 1.0) return static_cast<double>(k + 1);
        return (legendre(k, x) - legendre(k + 1, x)) / (1.0 - x);
      };
      df = [k](double x) {
        if (x >= 1.0) return 0.0;
        const double num = legendre(k, x) - legendre(k + 1, x);
        const double dnum = legendre_deriv(k, x) - legendre_deriv(k + 1, x);
        return (dnum * (1.0 - x) + num) / ((1.0 - x) * (1.0 - x));
      };
      break;
    }
  }
  std::vector<double> roots = find_roots(f, df);
  std::sort(roots.begin(), roots.end());
  bool ok = static_cast<int>(roots.size()) == k;
  for (std::size_t i = 0; ok && i < roots.size(); ++i) {
    if (!(roots[i] > -1.0 && roots[i] < 1.0)) ok = false;
    if (i > 0 && !(roots[i] > roots[i - 1])) ok = false;
  }
  if (!ok) {
    std::ostringstream os;
    os << "subdivision_nodes: found " << roots.size() << " distinct zeros in (-1,1), need "
       << k << " (family " << to_string(family) << ", c = " << c << ")";
    throw NonDistinctRoots(os.str());
  }
  if (family == SubdivisionFamily::Gauss ||
      (family == SubdivisionFamily::ParamC && c == 0.0)) {
    for (int i = 0; i < k / 2; ++i) {
      const double x = 0.5 * (roots[k - 1 - i] - roots[i]);
      roots[i] = -x;
      roots[k - 1 - i] = x;
    }
    if (k % 2 == 1) roots[k / 2] = 0.0;
  }
  return roots;
}

std::vector<double> quadrature_weights(int k, std::span<const double> nodes) {
  if (static_cast<int>(nodes.size()) != k + 2) {
    throw std::invalid_argument("quadrature_weights: need k+2 nodes");
  }
  // Unknowns A_1..A_{k+1}; moment equations in the Legendre basis,
  // sum_j A_j P_d(xi_j) = 2 [d == 0] for d = 0..k.
  const int n = k + 1;
  Eigen::MatrixXd m(n, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(0) = 2.0;
  for (int d = 0; d < n; ++d) {
    for (int j = 0; j < n; ++j) m(d, j) = legendre(d, nodes[j + 1]);
  }
  const Eigen::VectorXd a = m.fullPivLu().solve(rhs);
  std::vector<double> weights(k + 2, 0.0);
  for (int j = 0; j < n; ++j) weights[j + 1] = a(j);

  SubdivisionRule probe = SubdivisionRule::from_weights(
      k, std::vector<double>(nodes.begin(), nodes.end()), weights);
  const double res = probe.exactness_residual(std::max(2 * k - 1, 0));
  if (!(res < 1e-12)) {
    std::ostringstream os;
    os << "quadrature_weights: exactness residual " << res
       << " on degree <= " << 2 * k - 1 << " (nodes not admissible)";
    throw ExactnessViolation(os.str());
  }
  return weights;
}

double SubdivisionRule::exactness_residual(int degree) const {
  double worst = 0.0;
  for (int d = 0; d <= degree; ++d) {
    const double exact = (d % 2 == 0) ? 2.0 / (d + 1) : 0.0;
    const double q = apply([d](double x) { return std::pow(x, d); });
    worst = std::max(worst, std::abs(q - exact) / 2.0);
  }
  return worst;
}

double SubdivisionRule::positivity_margin() const {
  if (k < 1) return 1.0;
  const int kk = k;
  return 2.0 / (2 * kk - 1) -
         apply([kk](double x) { return legendre(kk + 1, x) * legendre(kk - 1, x); });
}

SubdivisionRule SubdivisionRule::from_weights(int k, std::vector<double> nodes,
                                              std::vector<double> weights) {
  SubdivisionRule r;
  r.k = k;
  r.family = SubdivisionFamily::ParamC;
  r.nodes = std::move(nodes);
  r.weights = std::move(weights);
  return r;
}

SubdivisionRule make_rule(int k, SubdivisionFamily family, double c) {
  if (k < 0) throw std::invalid_argument("make_rule: k must be >= 0");
  SubdivisionRule r;
  r.k = k;
  r.family = family;
  r.c = family == SubdivisionFamily::ParamC ? c : 0.0;
  r.nodes.push_back(-1.0);
  if (k >= 1) {
    const auto interior = subdivision_nodes(k, family, c);
    r.nodes.insert(r.nodes.end(), interior.begin(), interior.end());
  }
  r.nodes.push_back(1.0);
  r.weights = quadrature_weights(k, r.nodes);
  if (k >= 1 && !(r.positivity_margin() > 0.0)) {
    throw NotSPD("make_rule: positivity margin violated");
  }
  return r;
}

}  // namespace oesv
