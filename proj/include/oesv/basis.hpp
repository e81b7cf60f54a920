#ifndef OESV_BASIS_HPP_
#define OESV_BASIS_HPP_

#include <vector>

namespace oesv {

// Legendre polynomials on the reference element [-1, 1], normalized so that
// P_n(1) = 1. A cell [x_c - h/2, x_c + h/2] is reached through x = x_c + h/2 xi.

double legendre(int n, double xi);
double legendre_deriv(int n, double xi);

/// d^order/dxi^order P_n(xi); zero once order > n.
double legendre_deriv_order(int n, int order, double xi);

/// Integral of P_n over [a, b] with -1 <= a <= b <= 1.
double legendre_integral(int n, double a, double b);

/// Order |alpha| of a 2D derivative multi-index in the filter's jump terms:
/// alpha_x + alpha_y (Total) or max(alpha_x, alpha_y) (Max).
enum class MultiIndexOrder { Total, Max };

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

/// n-point Gauss-Legendre rule on [-1, 1], exact up to degree 2n-1.
/// Valid for 1 <= n <= 16.
QuadratureRule gauss_rule(int n);

/// Maps a rule on [-1, 1] onto [a, b] (weights scaled by (b - a) / 2).
QuadratureRule map_rule(const QuadratureRule& ref, double a, double b);

}  // namespace oesv

#endif  // OESV_BASIS_HPP_
