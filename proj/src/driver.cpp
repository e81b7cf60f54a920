#include "oesv/driver.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "json.hpp"
#include "oesv/basis.hpp"
#include "oesv/equations.hpp"
#include "oesv/errors.hpp"
#include "oesv/io.hpp"
#include "oesv/norms.hpp"
#include "oesv/oe_filter.hpp"
#include "oesv/subdivision.hpp"
#include "oesv/sv_operator_1d.hpp"
#include "oesv/sv_operator_2d.hpp"
#include "oesv/time_integration.hpp"

namespace oesv {

namespace {

std::string out_path(const RunConfig& cfg, const std::string& suffix) {
  return cfg.out_dir + "/" + cfg.prefix + "_" + suffix;
}

template <class Eq>
double jump_of(const SvOperator1D<Eq>& op, const Field& u) {
  return jump_seminorm(op.mesh(), u, op.periodic());
}
template <class Eq>
double jump_of(const SvOperator2D<Eq>& op, const Field& u) {
  return jump_seminorm(op.mesh(), u, op.boundaries().periodic_x(), op.boundaries().periodic_y());
}

/// Calls f(state) at the (k+1)-point Gauss nodes of every cell.
template <class Eq, class F>
void for_nodes(const SvOperator1D<Eq>& op, const Field& u, F f) {
  const auto g = gauss_rule(op.k() + 1);
  for (int i = 0; i < op.num_cells(); ++i) {
    for (double x : g.nodes) f(op.eval(u, i, x));
  }
}
template <class Eq, class F>
void for_nodes(const SvOperator2D<Eq>& op, const Field& u, F f) {
  const auto g = gauss_rule(op.k() + 1);
  for (int i = 0; i < op.num_cells(); ++i) {
    for (double y : g.nodes) {
      for (double x : g.nodes) f(op.eval(u, i, x, y));
    }
  }
}

template <class Eq>
ErrorNorms component_error(const SvOperator1D<Eq>& op, const Field& u, int c,
                           const ExactSolution& ex, double t) {
  std::vector<double> buf(u.num_comp());
  return error_norms(op.mesh(), u, c, [&](double x) {
    ex(x, 0.0, t, buf);
    return buf[c];
  });
}
template <class Eq>
ErrorNorms component_error(const SvOperator2D<Eq>& op, const Field& u, int c,
                           const ExactSolution& ex, double t) {
  std::vector<double> buf(u.num_comp());
  return error_norms(op.mesh(), u, c, [&](double x, double y) {
    ex(x, y, t, buf);
    return buf[c];
  });
}

void write_history(const std::vector<HistoryRow>& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.precision(17);
  out << "step,t,tau,energy,jump,residue\n";
  for (const auto& r : h) {
    out << r.step << ',' << r.t << ',' << r.tau << ',' << r.energy << ',' << r.jump << ','
        << r.residue << '\n';
  }
  if (!out) throw IoError("write to '" + path + "' failed");
}

template <class Eq>
void write_field(const SvOperator1D<Eq>& op, const Field& u, const RunConfig& cfg,
                 RunOutcome& o) {
  if (!cfg.csv) return;
  const auto p = out_path(cfg, "solution.csv");
  write_solution_csv(op.mesh(), u, component_names(1, u.num_comp()), p);
  o.files.push_back(p);
}
template <class Eq>
void write_field(const SvOperator2D<Eq>& op, const Field& u, const RunConfig& cfg,
                 RunOutcome& o) {
  const auto names = component_names(2, u.num_comp());
  if (cfg.vtk) {
    const auto p = out_path(cfg, "averages.vtk");
    write_vtk_averages(op.mesh(), u, names, p);
    o.files.push_back(p);
  }
  if (cfg.nodal_vtk) {
    const auto p = out_path(cfg, "nodal.vtk");
    write_vtk_nodal(op.mesh(), u, names, p);
    o.files.push_back(p);
  }
}

template <class Op>
RunOutcome execute_op(const RunConfig& cfg, const Problem& p, const Op& op,
                      const ExecuteOptions& eo) {
  RunOutcome o;
  o.benchmark = cfg.benchmark.empty() ? "inline" : cfg.benchmark;
  o.equation = to_string(p.equation);
  o.cells = op.num_cells();
  o.mesh_label = p.dim() == 1 ? std::to_string(cfg.nx)
                              : std::to_string(cfg.nx) + "x" + std::to_string(cfg.ny);
  o.watch_component = p.watch_component;

  Field u0 = p.initial_field(op.mesh());
  o.mass_initial = total_mass(op.mesh(), u0);
  const RKScheme scheme = builtin_scheme(cfg.scheme);

  RunOptions ro;
  ro.cfl = cfg.cfl;
  ro.t_final = cfg.t_final;
  ro.filter = cfg.filter;
  ro.fixed_tau = cfg.fixed_tau;
  if (cfg.max_steps > 0) ro.max_steps = cfg.max_steps;
  Field prev = u0;
  double last_tau = 0.0;
  const bool track = eo.record_history || p.steady;
  ro.callback = [&](long step, double t, const Field& u, double tau) {
    const bool landing = step > 1 && t == cfg.t_final && tau < last_tau * (1.0 - 1e-9);
    last_tau = tau;
    if (!track) return true;
    HistoryRow row;
    row.step = step;
    row.t = t;
    row.tau = tau;
    row.residue = average_residue(prev, u, tau);
    if (eo.record_history) {
      row.energy = star_norm(op.mesh(), u);
      row.jump = jump_of(op, u);
    }
    o.residue_peak = std::max(o.residue_peak, row.residue);
    (landing ? o.residue_landing : o.residue_final) = row.residue;
    o.history.push_back(row);
    prev = u;
    return true;
  };

  Field final_u;
  try {
    RunResult res = run(op, std::move(u0), scheme, ro);
    o.steps = res.steps;
    o.t = res.t;
    o.wall_seconds = res.wall_seconds;
    o.stopped_early = res.stopped_early;
    final_u = std::move(res.u);
  } catch (const NonPhysicalState& e) {
    o.ok = false;
    o.physical = false;
    o.error_category = e.category();
    o.error_message = e.what();
    o.fail_cell = e.cell();
    o.fail_stage = e.stage();
    o.fail_time = e.time();
    o.steps = o.history.empty() ? 0 : o.history.back().step;
  } catch (const NoProgress& e) {
    o.ok = false;
    o.error_category = e.category();
    o.error_message = e.what();
    o.steps = o.history.empty() ? 0 : o.history.back().step;
  }

  if (o.ok) {
    o.mass_final = total_mass(op.mesh(), final_u);
    if (p.exact) {
      o.has_exact = true;
      for (int c = 0; c < p.num_comp(); ++c) {
        o.errors.push_back(component_error(op, final_u, c, *p.exact, o.t));
      }
    }
    o.watch_range = nodal_range(final_u, p.watch_component);
    if (!std::isnan(p.watch_lo)) o.bound_lo = p.watch_lo;
    if (!std::isnan(p.watch_hi)) o.bound_hi = p.watch_hi;
    o.has_bounds = !std::isnan(p.watch_lo) || !std::isnan(p.watch_hi);
    if (o.has_bounds) o.overshoot = overshoot_metric(final_u, p.watch_component, o.bound_lo, o.bound_hi);
    using Eq = std::decay_t<decltype(op.equation())>;
    if constexpr (Eq::n_comp > 1) {
      double rmin = std::numeric_limits<double>::infinity(), pmin = rmin;
      const auto& eq = op.equation();
      for_nodes(op, final_u, [&](const auto& s) {
        rmin = std::min(rmin, s[0]);
        pmin = std::min(pmin, eq.pressure(s));
      });
      o.min_density = rmin;
      o.min_pressure = pmin;
      o.physical = rmin > 0.0 && pmin > 0.0;
    }
  }

  if (eo.write_files) {
    ensure_directory(cfg.out_dir);
    if (o.ok) {
      write_field(op, final_u, cfg, o);
      if (cfg.csv && o.has_exact) {
        ConvergenceTable table;
        table.add(o.mesh_label, o.cells, o.errors[p.watch_component]);
        const auto path = out_path(cfg, "errors.csv");
        table.write_csv(path);
        o.files.push_back(path);
      }
      if (cfg.damping && cfg.filter && last_tau > 0.0) {
        const auto path = out_path(cfg, "damping.csv");
        write_damping_csv(damping_report(op, final_u, last_tau), path);
        o.files.push_back(path);
      }
    }
    if (cfg.history && !o.history.empty()) {
      const auto path = out_path(cfg, "history.csv");
      write_history(o.history, path);
      o.files.push_back(path);
    }
    if (cfg.summary) {
      const auto path = out_path(cfg, "summary.json");
      o.files.push_back(path);
      std::ofstream out(path);
      if (!out) throw IoError("cannot open '" + path + "' for writing");
      out << summary_json(cfg, o) << '\n';
      if (!out) throw IoError("write to '" + path + "' failed");
    }
  }
  return o;
}

}  // namespace

RunOutcome execute(const RunConfig& cfg, const ExecuteOptions& opt) {
  const Problem p = resolve_problem(cfg);
  const SubdivisionRule rule = make_rule(cfg.k, parse_family(cfg.family), cfg.c);
  const MultiIndexOrder multi_index =
      cfg.multi_index == "max" ? MultiIndexOrder::Max : MultiIndexOrder::Total;
  const Rect& d = p.domain;
  switch (p.equation) {
    case EquationKind::Advection1D: {
      p.bc1.validate();
      SvOperator1D<Advection1D> op(build_mesh_1d(d.x0, d.x1, cfg.nx, rule),
                                   Advection1D{p.velocity[0], false}, p.bc1);
      return execute_op(cfg, p, op, opt);
    }
    case EquationKind::Euler1D: {
      p.bc1.validate();
      SvOperator1D<Euler1D> op(build_mesh_1d(d.x0, d.x1, cfg.nx, rule), Euler1D{p.gamma}, p.bc1);
      return execute_op(cfg, p, op, opt);
    }
    case EquationKind::Advection2D: {
      p.bc2.validate();
      SvOperator2D<Advection2D> op(build_mesh_2d(d, cfg.nx, cfg.ny, rule),
                                   Advection2D{p.velocity[0], p.velocity[1]}, p.bc2, p.walls);
      op.set_multi_index(multi_index);
      return execute_op(cfg, p, op, opt);
    }
    case EquationKind::Euler2D: {
      p.bc2.validate();
      SvOperator2D<Euler2D> op(build_mesh_2d(d, cfg.nx, cfg.ny, rule), Euler2D{p.gamma}, p.bc2,
                               p.walls);
      op.set_multi_index(multi_index);
      return execute_op(cfg, p, op, opt);
    }
  }
  throw ValidationError("unsupported equation");
}

std::string summary_json(const RunConfig& cfg, const RunOutcome& o) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["benchmark"] = o.benchmark;
  j["equation"] = o.equation;
  j["mesh"] = o.mesh_label;
  j["cells"] = o.cells;
  j["k"] = cfg.k;
  j["scheme"] = cfg.scheme;
  j["filter"] = cfg.filter;
  j["status"] = o.ok ? "ok" : "failed";
  if (!o.ok) {
    ordered_json e;
    e["category"] = o.error_category;
    e["message"] = o.error_message;
    if (o.error_category == "NonPhysicalState") {
      e["cell"] = o.fail_cell;
      e["stage"] = o.fail_stage;
      e["time"] = o.fail_time;
    }
    j["error"] = e;
  }
  j["steps"] = o.steps;
  j["t"] = o.t;
  j["wall_seconds"] = o.wall_seconds;
  j["stopped_early"] = o.stopped_early;
  if (o.has_exact) {
    ordered_json errs = ordered_json::array();
    for (const auto& e : o.errors) errs.push_back({{"l1", e.l1}, {"l2", e.l2}, {"linf", e.linf}});
    j["errors"] = errs;
  }
  j["watch_component"] = o.watch_component;
  j["watch_range"] = {o.watch_range[0], o.watch_range[1]};
  if (o.has_bounds) {
    j["bounds"] = {std::isfinite(o.bound_lo) ? ordered_json(o.bound_lo) : ordered_json(),
                   std::isfinite(o.bound_hi) ? ordered_json(o.bound_hi) : ordered_json()};
    j["undershoot"] = o.overshoot.undershoot;
    j["overshoot"] = o.overshoot.overshoot;
  }
  j["physical"] = o.physical;
  if (!std::isnan(o.min_density)) {
    j["min_density"] = o.min_density;
    j["min_pressure"] = o.min_pressure;
  }
  if (!o.history.empty()) {
    j["residue_peak"] = o.residue_peak;
    j["residue_final"] = o.residue_final;
    if (!std::isnan(o.residue_landing)) j["residue_landing"] = o.residue_landing;
  }
  j["mass_initial"] = o.mass_initial;
  j["mass_final"] = o.mass_final;
  j["config"] = echo_config(cfg);
  return j.dump(2);
}

ConvergenceTable convergence_study(const RunConfig& cfg, int levels,
                                   std::vector<RunOutcome>* outcomes) {
  if (levels < 1) throw ValidationError("convergence study needs at least one level");
  const Problem p = resolve_problem(cfg);
  if (!p.exact) throw ValidationError("convergence study needs an exact solution");
  ConvergenceTable table;
  RunConfig c = cfg;
  for (int l = 0; l < levels; ++l) {
    c.nx = cfg.nx << l;
    c.ny = p.dim() == 1 ? 1 : cfg.ny << l;
    c.prefix = cfg.prefix + "_" + std::to_string(c.nx);
    RunOutcome o = execute(c, {false, false});
    if (!o.ok) {
      throw NonPhysicalState("convergence level " + o.mesh_label + " failed: " + o.error_message,
                             o.fail_cell, o.fail_stage, o.fail_time);
    }
    table.add(o.mesh_label, o.cells, o.errors[p.watch_component]);
    if (outcomes) outcomes->push_back(std::move(o));
  }
  return table;
}

}  // namespace oesv
