#ifndef OESV_SUBDIVISION_HPP_
#define OESV_SUBDIVISION_HPP_

#include <span>
#include <string>
#include <vector>

namespace oesv {

enum class SubdivisionFamily { Gauss, RightRadau, ParamC };

std::string to_string(SubdivisionFamily family);
SubdivisionFamily parse_family(const std::string& name);

/// Control-volume subdivision of the reference cell [-1, 1] together with the
/// quadrature Q(v) = sum_j A_j v(xi_j) that lives on its k+2 nodes.
///
/// nodes = {-1, xi_1, ..., xi_k, +1}. Weights refer to the reference cell;
/// on a physical cell of size h they scale by h/2, so A_{i,j} v_x(x_{i,j})
/// equals A_j dv/dxi(xi_j) independently of h.
struct SubdivisionRule {
  int k = 0;
  SubdivisionFamily family = SubdivisionFamily::Gauss;
  double c = 0.0;  // only meaningful for ParamC
  std::vector<double> nodes;
  std::vector<double> weights;

  int num_cv() const { return k + 1; }
  bool upwind() const { return weights.front() == 0.0; }
  std::span<const double> interior_nodes() const {
    return std::span<const double>(nodes).subspan(1, k);
  }

  /// Q applied to a callable on the reference cell.
  template <class F>
  double apply(F&& f) const {
    double s = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) s += weights[j] * f(nodes[j]);
    return s;
  }

  /// max over monomials xi^d with d <= degree of |Q(xi^d) - int xi^d| / 2.
  double exactness_residual(int degree) const;

  /// 2/(2k-1) - Q(P_{k+1} P_{k-1}) on the reference element; must be
  /// positive for the star bilinear form to be an inner product.
  double positivity_margin() const;

  /// Rule with prescribed (possibly inadmissible) weights. No validation;
  /// used for negative controls.
  static SubdivisionRule from_weights(int k, std::vector<double> nodes,
                                      std::vector<double> weights);
};

/// k interior subdivision nodes, strictly increasing in (-1, 1).
///   Gauss      : zeros of P_k
///   RightRadau : interior nodes of the (k+1)-point Radau rule that contains +1
///   ParamC     : zeros of P_k + c/(k(1-c)) (xi+1) P_k', -1/k < c < 1
/// Throws NonDistinctRoots when fewer than k zeros are found in (-1, 1).
std::vector<double> subdivision_nodes(int k, SubdivisionFamily family, double c = 0.0);

/// Weights A_0..A_{k+1} with A_0 = 0, exact for degree <= k by construction,
/// then checked for exactness up to degree 2k-1 (ExactnessViolation otherwise).
std::vector<double> quadrature_weights(int k, std::span<const double> nodes);

/// Assembled and validated rule. Throws ExactnessViolation / NotSPD when the
/// family parameters break the admissibility conditions.
SubdivisionRule make_rule(int k, SubdivisionFamily family, double c = 0.0);

}  // namespace oesv

#endif  // OESV_SUBDIVISION_HPP_
