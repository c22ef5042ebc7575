#include "percycle/dde.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dp_tableau.hpp"
#include "percycle/errors.hpp"
#include "percycle/model.hpp"

namespace percycle::solver {

namespace {

double inf_norm(const State5& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double error_norm(const State5& err, const State5& y0, const State5& y1,
                  double atol, double rtol) {
  double acc = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    double sc = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    double q = err[i] / sc;
    acc += q * q;
  }
  return std::sqrt(acc / 5.0);
}

// The delayed field for one chunked integration: the repression argument
// reads PN at t - tau from the history (t <= tau) or from the already
// completed dense record. Values are floored at zero so interpolation
// undershoot near the axis cannot poison the Hill term.
struct ChunkedDelayReader {
  const ParamSet& p;
  const HistorySet& hist;
  const DenseOutput& done;

  double operator()(double t) const {
    const double td = t - p.tau;
    if (td <= 0.0) return std::max(0.0, hist.PN.eval(td, p.T));
    return std::max(0.0, done.eval(td)[4]);
  }
};

// Overlap mode: integrates with steps that may span several delays,
// resolving the self-reference of each step by fixed-point sweeps over the
// step's own Hermite interpolant.
DdeResult simulate_overlap(const ParamSet& p, const HistorySet& history,
                           double t_end, const DdeOptions& opt) {
  using namespace dp;
  DdeResult res;
  res.overlap_mode = true;
  const IntegratorOptions& io = opt.integrator;
  const double tau = p.tau;

  State5 y = history.eval(0.0, p.T);
  double t = 0.0;
  double h = io.initial_step > 0.0 ? io.initial_step : t_end / 100.0;
  if (io.max_step > 0.0) h = std::min(h, io.max_step);
  const double h_floor = 1e-14 * t_end;

  // Reads PN(td) from history, the completed record, or the provisional
  // record of the step being built. With no provisional data yet, values
  // past the frontier are linearly extrapolated from the frontier slope.
  auto read_pn = [&](double td, const StepRecord* prov) -> double {
    if (td <= 0.0) return std::max(0.0, history.PN.eval(td, p.T));
    if (prov && td >= prov->t0) {
      if (prov->t1 > prov->t0) {
        return std::max(0.0, hermite_eval(*prov, td)[4]);
      }
      return std::max(0.0, prov->y0[4] + (td - prov->t0) * prov->f0[4]);
    }
    return std::max(0.0, res.dense.eval(td)[4]);
  };

  State5 k1 = rhs_delayed(p, t, y, read_pn(t - tau, nullptr));
  long steps = 0;
  for (; steps < io.max_steps; ++steps) {
    if (t >= t_end) break;
    h = std::min(h, t_end - t);
    if (h <= h_floor) {
      throw PercycleError(ErrorCode::step_failure,
                          "delay step size underflow at t = " +
                              std::to_string(t));
    }

    // Sweep 0 uses extrapolation for reads past t; later sweeps read the
    // provisional Hermite record of this very step.
    StepRecord prov{t, t, y, y, k1, k1};  // degenerate: extrapolation mode
    State5 k2, k3, k4, k5, k6, k7, y5;
    bool domain_ok = true;
    bool settled = false;
    try {
      for (int sweep = 0; sweep <= opt.max_overlap_sweeps && !settled;
           ++sweep) {
        auto fdel = [&](double s, const State5& x) {
          return rhs_delayed(p, s, x, read_pn(s - tau, &prov));
        };
        State5 s;
        for (std::size_t i = 0; i < 5; ++i) s[i] = y[i] + h * a21 * k1[i];
        k2 = fdel(t + c2 * h, s);
        for (std::size_t i = 0; i < 5; ++i)
          s[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        k3 = fdel(t + c3 * h, s);
        for (std::size_t i = 0; i < 5; ++i)
          s[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        k4 = fdel(t + c4 * h, s);
        for (std::size_t i = 0; i < 5; ++i)
          s[i] = y[i] +
                 h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        k5 = fdel(t + c5 * h, s);
        for (std::size_t i = 0; i < 5; ++i)
          s[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                             a64 * k4[i] + a65 * k5[i]);
        k6 = fdel(t + h, s);
        State5 y5_new;
        for (std::size_t i = 0; i < 5; ++i)
          y5_new[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] +
                                  a75 * k5[i] + a76 * k6[i]);
        k7 = fdel(t + h, y5_new);
        if (sweep > 0) {
          State5 change;
          for (std::size_t i = 0; i < 5; ++i) change[i] = y5_new[i] - y5[i];
          settled = inf_norm(change) <=
                    0.1 * (io.abs_tol + io.rel_tol * inf_norm(y5_new));
        }
        y5 = y5_new;
        prov = {t, t + h, y, y5, k1, k7};
      }
    } catch (const PercycleError& e) {
      if (e.code() != ErrorCode::domain_error) throw;
      domain_ok = false;
    }
    if (!domain_ok) {
      h *= 0.5;
      continue;
    }

    State5 err;
    for (std::size_t i = 0; i < 5; ++i) {
      err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                    e6 * k6[i] + e7 * k7[i]);
    }
    const double en = error_norm(err, y, y5, io.abs_tol, io.rel_tol);
    double factor = en > 0.0 ? 0.9 * std::pow(en, -0.2) : 5.0;
    factor = std::clamp(factor, 0.2, 5.0);
    if (en <= 1.0) {
      res.dense.push(prov);
      t += h;
      y = y5;
      k1 = k7;
    }
    h *= factor;
    if (io.max_step > 0.0) h = std::min(h, io.max_step);
  }
  if (t < t_end) {
    throw PercycleError(ErrorCode::step_failure,
                        "delay step budget exhausted at t = " +
                            std::to_string(t));
  }
  res.final_state = y;
  return res;
}

}  // namespace

DdeResult simulate_dde(const ParamSet& p, const HistorySet& history,
                       double t_end, const DdeOptions& opt) {
  if (!(t_end > 0.0)) {
    throw PercycleError(ErrorCode::precondition,
                        "simulate_dde needs a positive end time");
  }
  history.validate(p.T);

  DdeResult res;
  if (p.tau == 0.0) {
    // Degenerate case: the delayed model is the plain one.
    const State5 y0 = history.eval(0.0, p.T);
    res.final_state = integrate(model_field(p), 0.0, t_end, y0,
                                opt.integrator, &res.dense);
    res.n_chunks = 1;
    return res;
  }
  if (p.tau < opt.overlap_threshold) return simulate_overlap(p, history, t_end, opt);

  // Method of steps: each delay-length chunk only reads finished data.
  State5 y = history.eval(0.0, p.T);
  const ChunkedDelayReader pn_delayed{p, history, res.dense};
  FieldFn f = [&](double t, const State5& x) {
    return rhs_delayed(p, t, x, pn_delayed(t));
  };
  double t = 0.0;
  while (t < t_end) {
    const double t_next = std::min(t + p.tau, t_end);
    y = integrate(f, t, t_next, y, opt.integrator, &res.dense);
    t = t_next;
    ++res.n_chunks;
  }
  res.final_state = y;
  return res;
}

double periodicity_defect(const DenseOutput& dense, double T, double a,
                          double b, int samples) {
  if (samples < 1) samples = 1;
  const double slack = 1e-9 * std::max(1.0, std::abs(b));
  if (a - T < dense.t_begin() - slack || b > dense.t_end() + slack || b < a) {
    throw PercycleError(ErrorCode::precondition,
                        "defect window not covered by the dense output");
  }
  double worst = 0.0;
  for (int k = 0; k <= samples; ++k) {
    const double t = a + (b - a) * k / samples;
    const State5 now = dense.eval(t);
    const State5 before = dense.eval(t - T);
    State5 diff;
    for (std::size_t i = 0; i < 5; ++i) diff[i] = now[i] - before[i];
    worst = std::max(worst, inf_norm(diff));
  }
  return worst;
}

}  // namespace percycle::solver
