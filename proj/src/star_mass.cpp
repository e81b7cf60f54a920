#include "oesv/star_mass.hpp"

#include <sstream>

#include "oesv/basis.hpp"
#include "oesv/errors.hpp"

namespace oesv {

std::vector<double> mstar_apply(std::span<const double> coeffs, const SubdivisionRule& rule,
                                double h) {
  const int k = rule.k;
  auto value = [&](double xi) {
    double s = 0.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) s += coeffs[n] * legendre(static_cast<int>(n), xi);
    return s;
  };
  auto dx = [&](double xi) {
    double s = 0.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
      s += coeffs[n] * legendre_deriv(static_cast<int>(n), xi);
    }
    return s * 2.0 / h;
  };
  std::vector<double> out(k + 1);
  out[0] = value(-1.0) + 0.5 * h * rule.weights[0] * dx(rule.nodes[0]);
  for (int j = 1; j <= k; ++j) out[j] = out[j - 1] + 0.5 * h * rule.weights[j] * dx(rule.nodes[j]);
  return out;
}

Eigen::MatrixXd mstar_table(const SubdivisionRule& rule) {
  const int n = rule.k + 1;
  Eigen::MatrixXd t(n, n);
  std::vector<double> e(n, 0.0);
  for (int m = 0; m < n; ++m) {
    std::fill(e.begin(), e.end(), 0.0);
    e[m] = 1.0;
    const auto cv = mstar_apply(e, rule, 2.0);
    for (int j = 0; j < n; ++j) t(j, m) = cv[j];
  }
  return t;
}

Eigen::MatrixXd cv_integral_table(const SubdivisionRule& rule) {
  const int n = rule.k + 1;
  Eigen::MatrixXd t(n, n);
  for (int j = 0; j < n; ++j) {
    for (int m = 0; m < n; ++m) t(j, m) = legendre_integral(m, rule.nodes[j], rule.nodes[j + 1]);
  }
  return t;
}

Eigen::MatrixXd star_gram_reference(const SubdivisionRule& rule) {
  // G_mn = sum_j (M* P_n)_j * int_{CV_j} P_m
  return cv_integral_table(rule).transpose() * mstar_table(rule);
}

StarMassMatrix::StarMassMatrix(const SubdivisionRule& rule) : ref_(star_gram_reference(rule)) {
  const double asym = (ref_ - ref_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-13 * ref_.cwiseAbs().maxCoeff()) {
    std::ostringstream os;
    os << "star mass matrix not symmetric (max asymmetry " << asym << ")";
    throw NotSPD(os.str());
  }
  const Eigen::MatrixXd sym = 0.5 * (ref_ + ref_.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  min_eig_ = es.eigenvalues().minCoeff();
  if (!(min_eig_ > 0.0)) {
    std::ostringstream os;
    os << "star mass matrix not positive definite (min eigenvalue " << min_eig_ << ")";
    throw NotSPD(os.str());
  }
  ref_ = sym;
  inv_ = sym.llt().solve(Eigen::MatrixXd::Identity(sym.rows(), sym.cols()));
}

double StarMassMatrix::inner(double h, std::span<const double> v, std::span<const double> w) const {
  double s = 0.0;
  for (int m = 0; m < size(); ++m) {
    for (int n = 0; n < size(); ++n) s += v[m] * ref_(m, n) * w[n];
  }
  return 0.5 * h * s;
}

}  // namespace oesv
