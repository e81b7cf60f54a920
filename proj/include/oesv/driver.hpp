#ifndef OESV_DRIVER_HPP_
#define OESV_DRIVER_HPP_

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "oesv/analysis.hpp"
#include "oesv/config.hpp"

namespace oesv {

struct HistoryRow {
  long step = 0;
  double t = 0.0, tau = 0.0;
  double energy = 0.0;   // star norm, summed over components
  double jump = 0.0;     // interface jump seminorm
  double residue = 0.0;  // average residue of the step
};

struct RunOutcome {
  std::string benchmark, equation, mesh_label;
  long cells = 0;

  bool ok = true;
  std::string error_category, error_message;
  long fail_cell = -1;
  int fail_stage = -1;
  double fail_time = std::numeric_limits<double>::quiet_NaN();

  long steps = 0;
  double t = 0.0, wall_seconds = 0.0;
  bool stopped_early = false;

  /// Per-component errors against the exact solution at the final time.
  bool has_exact = false;
  std::vector<ErrorNorms> errors;

  /// Watched component: nodal range and violation of the admissible bounds.
  int watch_component = 0;
  std::array<double, 2> watch_range{0.0, 0.0};
  bool has_bounds = false;
  double bound_lo = -std::numeric_limits<double>::infinity();
  double bound_hi = std::numeric_limits<double>::infinity();
  Overshoot overshoot;

  /// Euler only: minimum density and pressure on Gauss nodes.
  bool physical = true;
  double min_density = std::numeric_limits<double>::quiet_NaN();
  double min_pressure = std::numeric_limits<double>::quiet_NaN();

  /// residue_final is taken from the last full CFL step. A shorter step that
  /// lands on t_final perturbs the tau-dependent discrete steady state, so its
  /// residue is kept apart (NaN when the run did not end on such a step).
  double residue_peak = 0.0, residue_final = 0.0;
  double residue_landing = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> mass_initial, mass_final;
  std::vector<HistoryRow> history;
  std::vector<std::string> files;
};

struct ExecuteOptions {
  bool write_files = true;
  bool record_history = true;
};

/// Builds mesh, operator and initial data from the config and runs it.
/// NonPhysicalState and NoProgress end the run with ok = false and the
/// diagnostics filled in; other errors propagate.
RunOutcome execute(const RunConfig& cfg, const ExecuteOptions& opt = {});

/// Machine-readable run summary; "config" holds echo_config(cfg).
std::string summary_json(const RunConfig& cfg, const RunOutcome& out);

/// Runs `levels` meshes, doubling nx and ny each time, and tabulates the
/// errors of the watched component. Throws ValidationError without an exact
/// solution.
ConvergenceTable convergence_study(const RunConfig& cfg, int levels,
                                   std::vector<RunOutcome>* outcomes = nullptr);

}  // namespace oesv

#endif  // OESV_DRIVER_HPP_
