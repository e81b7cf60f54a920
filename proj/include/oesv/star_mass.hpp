#ifndef OESV_STAR_MASS_HPP_
#define OESV_STAR_MASS_HPP_

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "oesv/subdivision.hpp"

namespace oesv {

/// Piecewise-constant image of a cell polynomial under the trial-to-test
/// mapping M*: the value on CV_0 is v(left) + A_0 v'(x_0), and consecutive CV
/// values differ by A_j v'(x_j). `coeffs` are the Legendre coefficients of v on
/// a cell of size h. Returns k+1 CV values.
std::vector<double> mstar_apply(std::span<const double> coeffs, const SubdivisionRule& rule,
                                double h);

/// Table T(j, n) = (M* P_n)|_{CV_j} on the reference cell.
Eigen::MatrixXd mstar_table(const SubdivisionRule& rule);

/// Table I(j, m) = integral of P_m over CV_j of the reference cell.
Eigen::MatrixXd cv_integral_table(const SubdivisionRule& rule);

/// Unvalidated reference-cell matrix G_mn = <P_m, M* P_n> on [-1, 1].
/// Symmetric positive definite exactly when the rule is admissible.
Eigen::MatrixXd star_gram_reference(const SubdivisionRule& rule);

/// Star mass matrix of a cell, G(h) = (h/2) G_ref. A single reference matrix
/// and its inverse serve every cell size.
class StarMassMatrix {
 public:
  /// Throws NotSPD when the assembled matrix is not symmetric positive definite.
  explicit StarMassMatrix(const SubdivisionRule& rule);

  int size() const { return static_cast<int>(ref_.rows()); }
  const Eigen::MatrixXd& reference() const { return ref_; }
  const Eigen::MatrixXd& reference_inverse() const { return inv_; }
  Eigen::MatrixXd matrix(double h) const { return 0.5 * h * ref_; }
  double min_eigenvalue_reference() const { return min_eig_; }

  /// Solves G(h) x = rhs.
  Eigen::VectorXd solve(double h, const Eigen::VectorXd& rhs) const {
    return (2.0 / h) * (inv_ * rhs);
  }
  /// <v, w>_* on one cell of size h from Legendre coefficients.
  double inner(double h, std::span<const double> v, std::span<const double> w) const;

 private:
  Eigen::MatrixXd ref_;
  Eigen::MatrixXd inv_;
  double min_eig_ = 0.0;
};

}  // namespace oesv

#endif  // OESV_STAR_MASS_HPP_
