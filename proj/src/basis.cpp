#include "oesv/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oesv {

double legendre(int n, double xi) {
  if (n == 0) return 1.0;
  double p0 = 1.0, p1 = xi;
  for (int l = 1; l < n; ++l) {
    const double p2 = ((2 * l + 1) * xi * p1 - l * p0) / (l + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double legendre_deriv(int n, double xi) { return legendre_deriv_order(n, 1, xi); }

double legendre_deriv_order(int n, int order, double xi) {
  if (order > n) return 0.0;
  if (order == 0) return legendre(n, xi);
  // Differentiating (l+1) P_{l+1} = (2l+1) xi P_l - l P_{l-1} m times gives
  // (l+1) P_{l+1}^(m) = (2l+1) (xi P_l^(m) + m P_l^(m-1)) - l P_{l-1}^(m).
  std::vector<double> prev(order + 1, 0.0), cur(order + 1, 0.0), next(order + 1);
  prev[0] = 1.0;  // P_0
  cur[0] = xi;    // P_1
  if (order >= 1) cur[1] = 1.0;
  if (n == 1) return cur[order];
  for (int l = 1; l < n; ++l) {
    for (int m = 0; m <= order; ++m) {
      const double lower = m > 0 ? cur[m - 1] : 0.0;
      next[m] = ((2 * l + 1) * (xi * cur[m] + m * lower) - l * prev[m]) / (l + 1);
    }
    prev.swap(cur);
    cur.swap(next);
  }
  return cur[order];
}

double legendre_integral(int n, double a, double b) {
  if (n == 0) return b - a;
  // (2n+1) P_n = P_{n+1}' - P_{n-1}'
  auto anti = [n](double x) {
    return (legendre(n + 1, x) - legendre(n - 1, x)) / (2 * n + 1);
  };
  return anti(b) - anti(a);
}

QuadratureRule gauss_rule(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("gauss_rule: need 1 <= n <= 16");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev-type initial guess, ordered ascending.
    double x = -std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const double dx = legendre(n, x) / legendre_deriv(n, x);
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre_deriv(n, x);
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  for (int i = 0; i < n / 2; ++i) {
    // enforce exact symmetry
    const double x = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[n - 1 - i] + rule.weights[i]);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = w;
  }
  return rule;
}

QuadratureRule map_rule(const QuadratureRule& ref, double a, double b) {
  QuadratureRule out;
  out.nodes.resize(ref.nodes.size());
  out.weights.resize(ref.weights.size());
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (std::size_t q = 0; q < ref.nodes.size(); ++q) {
    out.nodes[q] = mid + half * ref.nodes[q];
    out.weights[q] = half * ref.weights[q];
  }
  return out;
}

}  // namespace oesv
