#ifndef OESV_CONFIG_HPP_
#define OESV_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "oesv/mesh.hpp"
#include "oesv/problems.hpp"

namespace oesv {

/// Fully resolved run configuration. parse_config fills every default, so
/// echo_config(parse_config(t)) re-parses to an identical value.
struct RunConfig {
  // [run]
  std::string benchmark;  // empty for an inline problem
  int k = 2;
  std::string family = "gauss";
  double c = 0.0;
  std::string scheme;  // resolved RK scheme name
  double cfl = 0.0;
  double t_final = 0.0;
  int nx = 0, ny = 0;  // ny = 1 in 1D
  bool filter = true;
  std::string multi_index = "total";  // 2D filter derivative order: total or max
  bool fixed_tau = false;
  std::uint64_t seed = 1;
  bool paper_scale = false;
  long max_steps = 0;  // 0 = unlimited

  // [problem], inline problems only
  std::string equation;
  Rect domain{0.0, 1.0, 0.0, 1.0};
  std::string initial;
  double gamma = 1.4;
  double velocity_x = 1.0, velocity_y = 1.0;
  std::string bc_left = "periodic", bc_right = "periodic";
  std::string bc_bottom = "periodic", bc_top = "periodic";

  // [output]
  std::string out_dir = ".";
  std::string prefix = "run";
  bool csv = true;
  bool vtk = true;
  bool nodal_vtk = false;
  bool summary = true;
  bool history = true;
  bool damping = false;

  bool operator==(const RunConfig&) const = default;
};

/// Parses the line-oriented INI text described in the README. Syntax errors
/// raise ParseError, semantic ones ValidationError; the message lists every
/// diagnostic as "line L: key 'K': reason".
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Canonical text of a resolved config, numbers with 17 significant digits.
std::string echo_config(const RunConfig& cfg);

/// Resolved config for a registry benchmark with all defaults filled.
RunConfig benchmark_config(const std::string& name, bool paper_scale);

/// Problem described by the config (registry entry or inline problem).
Problem resolve_problem(const RunConfig& cfg);

}  // namespace oesv

#endif  // OESV_CONFIG_HPP_
