#ifndef OESV_TIME_INTEGRATION_HPP_
#define OESV_TIME_INTEGRATION_HPP_

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "oesv/errors.hpp"
#include "oesv/field.hpp"
#include "oesv/oe_filter.hpp"

namespace oesv {

/// Explicit RK method in Shu-Osher stage form:
///   u^{l+1} = sum_{kappa<=l} c[l][kappa] u^kappa + tau d[l][kappa] L(u^kappa).
struct RKScheme {
  std::string name;
  int order = 0;
  std::vector<std::vector<double>> c, d;

  int stages() const { return static_cast<int>(c.size()); }
  /// Largest |sum_kappa c[l][kappa] - 1| over the rows.
  double row_sum_defect() const;
  /// One-step amplification factor on u' = z u for complex-free real z.
  double amplification(double z) const;
};

/// SSPRK2, SSPRK3 or RK4; throws UnknownScheme otherwise.
RKScheme builtin_scheme(const std::string& name);
/// Scheme of order r used for accuracy runs with degree k (r = k + 1).
RKScheme scheme_for_order(int order);
std::vector<std::string> builtin_scheme_names();

/// One RK step of size tau from time t, optionally filtering every stage.
template <class Op>
void rk_step(const Op& op, Field& u, const RKScheme& s, double tau, double t, bool filter,
             DampingReport* last_report = nullptr) {
  const int ns = s.stages();
  std::vector<Field> stage(ns);
  std::vector<Field> rate(ns);
  std::vector<double> stage_t(ns + 1);
  stage[0] = u;
  stage_t[0] = t;
  for (int l = 0; l < ns; ++l) {
    // Rates are evaluated lazily, only for stages some row actually uses.
    for (int kap = 0; kap <= l; ++kap) {
      if (s.d[l][kap] != 0.0 && rate[kap].size() == 0) {
        try {
          op.residual(stage[kap], stage_t[kap], rate[kap]);
        } catch (const NonPhysicalState& e) {
          throw e.with_context(e.cell(), kap, stage_t[kap]);
        }
      }
    }
    Field next = stage[0];
    next *= s.c[l][0];
    double tn = s.c[l][0] * stage_t[0];
    for (int kap = 0; kap <= l; ++kap) {
      if (kap > 0 && s.c[l][kap] != 0.0) next.axpy(s.c[l][kap], stage[kap]);
      if (kap > 0) tn += s.c[l][kap] * stage_t[kap];
      if (s.d[l][kap] != 0.0) {
        next.axpy(tau * s.d[l][kap], rate[kap]);
        tn += tau * s.d[l][kap];
      }
    }
    if (filter) {
      try {
        apply_filter(op, next, tau, l + 1 == ns ? last_report : nullptr);
      } catch (const NonPhysicalState& e) {
        throw e.with_context(e.cell(), l + 1, tn);
      }
    }
    stage_t[l + 1] = tn;
    if (l + 1 < ns) {
      stage[l + 1] = std::move(next);
    } else {
      u = std::move(next);
    }
  }
}

template <class Op>
void step_rksv(const Op& op, Field& u, const RKScheme& s, double tau, double t) {
  rk_step(op, u, s, tau, t, false);
}

template <class Op>
void step_oesv(const Op& op, Field& u, const RKScheme& s, double tau, double t,
               DampingReport* last_report = nullptr) {
  rk_step(op, u, s, tau, t, true, last_report);
}

struct RunOptions {
  double cfl = 0.0;
  double t_final = 0.0;
  bool filter = true;
  /// Use tau = CFL / rate(u0) for every step (accuracy studies).
  bool fixed_tau = false;
  long max_steps = std::numeric_limits<long>::max();
  /// Called after every accepted step with (step, time, field, tau). Returning
  /// false stops the run early.
  std::function<bool(long, double, const Field&, double)> callback;
};

struct RunResult {
  Field u;
  double t = 0.0;
  long steps = 0;
  double wall_seconds = 0.0;
  bool stopped_early = false;
};

/// Time-marches u0 to t_final with CFL-controlled steps; the last step lands
/// exactly on t_final.
template <class Op>
RunResult run(const Op& op, Field u0, const RKScheme& s, const RunOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  RunResult res;
  res.u = std::move(u0);
  if (!(opt.cfl > 0.0)) throw ValidationError("CFL number must be positive");
  if (opt.filter && op.k() < 1) throw ValidationError("filter requires k >= 1");
  double t = 0.0;
  const double T = opt.t_final;
  double fixed = 0.0;
  if (opt.fixed_tau) {
    const double r = op.max_rate(res.u);
    fixed = r > 0.0 ? opt.cfl / r : std::numeric_limits<double>::infinity();
  }
  while (t < T && res.steps < opt.max_steps) {
    double tau = fixed;
    if (!opt.fixed_tau) {
      double r;
      try {
        r = op.max_rate(res.u);
      } catch (const NonPhysicalState& e) {
        throw e.with_context(e.cell(), 0, t);
      }
      tau = r > 0.0 ? opt.cfl / r : std::numeric_limits<double>::infinity();
    }
    const double remaining = T - t;
    bool last = false;
    if (tau >= remaining * (1.0 - 1e-12)) {
      tau = remaining;
      last = true;
    }
    if (!(tau > 1e-14 * std::max(T, 1e-300)) && !last) {
      throw NoProgress("time step underflow: tau = " + std::to_string(tau) +
                       " at t = " + std::to_string(t));
    }
    rk_step(op, res.u, s, tau, t, opt.filter);
    t = last ? T : t + tau;
    ++res.steps;
    if (opt.callback && !opt.callback(res.steps, t, res.u, tau)) {
      res.stopped_early = true;
      break;
    }
  }
  res.t = t;
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace oesv

#endif  // OESV_TIME_INTEGRATION_HPP_
