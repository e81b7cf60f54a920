#ifndef OESV_VERIFICATION_HPP_
#define OESV_VERIFICATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "oesv/field.hpp"
#include "oesv/problems.hpp"
#include "oesv/subdivision.hpp"

namespace oesv {

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  double value = 0.0;      // measured discrepancy or quantity
  double tolerance = 0.0;  // threshold it was compared against
  std::string detail;
};

struct VerificationReport {
  std::string name;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
  void add(CheckResult c) { checks.push_back(std::move(c)); }
};

/// Modal field with independent standard normal coefficients.
Field random_field(int dim, int k, int num_cells, int num_comp, std::uint64_t seed);

/// Symmetry and positive definiteness of the reference star Gram matrix,
/// agreement with the L2 inner product when one argument has degree <= k-1,
/// and the positivity margin of the rule.
VerificationReport verify_inner_product(const SubdivisionRule& rule, int trials,
                                        std::uint64_t seed = 1);

/// Control-volume rates against the integrated modal rates on random fields
/// (periodic). For 1D advection with an upwind rule, also compares H(v, w)
/// with an independent exact-integration DG form; for non-upwind rules that
/// check is reported as skipped.
VerificationReport verify_dg_equivalence(int n, const SubdivisionRule& rule, EquationKind eq,
                                         int trials, std::uint64_t seed = 1);
VerificationReport verify_dg_equivalence(int n, int k, EquationKind eq, int trials,
                                         std::uint64_t seed = 1);

/// Periodic 1D advection with the Gauss rule: energy identity, skew symmetry
/// of D*, monotone star-norm decay of `scheme` over `steps` steps at
/// CFL = 1/(2k+1), filter non-expansion and the downwind negative control.
VerificationReport verify_energy(int n, int k, const std::string& scheme, int steps,
                                 std::uint64_t seed = 1, int trials = 100);

/// The default property suite.
std::vector<VerificationReport> run_verify_suite(std::uint64_t seed = 1);

std::string reports_json(const std::vector<VerificationReport>& reports);
std::string reports_text(const std::vector<VerificationReport>& reports);

}  // namespace oesv

#endif  // OESV_VERIFICATION_HPP_
