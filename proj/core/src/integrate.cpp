#include "percycle/integrate.hpp"

#include <algorithm>
#include <cmath>

#include "dp_tableau.hpp"
#include "percycle/errors.hpp"
#include "percycle/model.hpp"

namespace percycle::solver {

namespace {

State5 axpy(const State5& y, double h, const State5& k) {
  State5 r;
  for (std::size_t i = 0; i < 5; ++i) r[i] = y[i] + h * k[i];
  return r;
}

// Scaled RMS norm of the embedded error estimate (value 1 sits exactly on
// the tolerance).
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

}  // namespace

double DenseOutput::t_begin() const {
  if (steps_.empty()) {
    throw PercycleError(ErrorCode::precondition, "dense output is empty");
  }
  return steps_.front().t0;
}

double DenseOutput::t_end() const {
  if (steps_.empty()) {
    throw PercycleError(ErrorCode::precondition, "dense output is empty");
  }
  return steps_.back().t1;
}

const StepRecord& DenseOutput::locate(double t) const {
  if (steps_.empty()) {
    throw PercycleError(ErrorCode::precondition, "dense output is empty");
  }
  // First step whose right end reaches t.
  std::size_t lo = 0, hi = steps_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (steps_[mid].t1 < t) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return steps_[lo];
}

State5 hermite_eval(const StepRecord& st, double t) {
  const double h = st.t1 - st.t0;
  double s = h > 0.0 ? (t - st.t0) / h : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  const double s2 = s * s;
  const double omys = 1.0 - s;
  const double h00 = (1.0 + 2.0 * s) * omys * omys;
  const double h10 = s * omys * omys;
  const double h01 = s2 * (3.0 - 2.0 * s);
  const double h11 = s2 * (s - 1.0);
  State5 y;
  for (std::size_t i = 0; i < 5; ++i) {
    y[i] = h00 * st.y0[i] + h10 * h * st.f0[i] + h01 * st.y1[i] +
           h11 * h * st.f1[i];
  }
  return y;
}

State5 DenseOutput::eval(double t) const { return hermite_eval(locate(t), t); }

State5 integrate(const FieldFn& f, double t0, double t1, const State5& y0,
                 const IntegratorOptions& opt, DenseOutput* dense,
                 IntegrationStats* stats) {
  if (!(t1 >= t0)) {
    throw PercycleError(ErrorCode::precondition,
                        "integrate needs t1 >= t0");
  }
  if (t1 == t0) return y0;

  const double span = t1 - t0;
  double h = opt.initial_step > 0.0 ? opt.initial_step : span / 100.0;
  if (opt.max_step > 0.0) h = std::min(h, opt.max_step);
  h = std::min(h, span);
  const double h_floor = 1e-14 * span;

  double t = t0;
  State5 y = y0;
  State5 k1 = f(t, y);
  long n_rhs = 1;
  long n_accepted = 0, n_rejected = 0;

  using namespace dp;
  for (long step = 0; step < opt.max_steps; ++step) {
    if (t >= t1) break;
    h = std::min(h, t1 - t);
    if (h <= h_floor) {
      throw PercycleError(ErrorCode::step_failure,
                          "step size underflow at t = " + std::to_string(t));
    }

    State5 k2, k3, k4, k5, k6, k7, y5;
    bool domain_ok = true;
    try {
      k2 = f(t + c2 * h, axpy(y, h * a21, k1));
      {
        State5 s;
        for (std::size_t i = 0; i < 5; ++i)
          s[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        k3 = f(t + c3 * h, s);
        for (std::size_t i = 0; i < 5; ++i)
          s[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        k4 = f(t + c4 * h, s);
        for (std::size_t i = 0; i < 5; ++i)
          s[i] = y[i] +
                 h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        k5 = f(t + c5 * h, s);
        for (std::size_t i = 0; i < 5; ++i)
          s[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                             a64 * k4[i] + a65 * k5[i]);
        k6 = f(t + h, s);
        for (std::size_t i = 0; i < 5; ++i)
          y5[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] +
                              a75 * k5[i] + a76 * k6[i]);
        k7 = f(t + h, y5);
      }
      n_rhs += 6;
    } catch (const PercycleError& e) {
      if (e.code() != ErrorCode::domain_error) throw;
      domain_ok = false;
    }
    if (!domain_ok) {
      h *= 0.5;
      ++n_rejected;
      continue;
    }

    State5 err;
    for (std::size_t i = 0; i < 5; ++i) {
      err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                    e6 * k6[i] + e7 * k7[i]);
    }
    const double en = error_norm(err, y, y5, opt.abs_tol, opt.rel_tol);
    double factor = en > 0.0 ? 0.9 * std::pow(en, -0.2) : 5.0;
    factor = std::clamp(factor, 0.2, 5.0);

    if (en <= 1.0) {
      const double t_new = t + h;
      if (dense) dense->push({t, t_new, y, y5, k1, k7});
      t = t_new;
      y = y5;
      k1 = k7;  // first-same-as-last
      ++n_accepted;
    } else {
      ++n_rejected;
    }
    h *= factor;
    if (opt.max_step > 0.0) h = std::min(h, opt.max_step);
  }

  if (t < t1) {
    throw PercycleError(ErrorCode::step_failure,
                        "step budget exhausted at t = " + std::to_string(t));
  }
  if (stats) {
    stats->n_accepted = n_accepted;
    stats->n_rejected = n_rejected;
    stats->n_rhs = n_rhs;
  }
  return y;
}

State5 integrate_rk4(const FieldFn& f, double t0, double t1, const State5& y0,
                     int n_steps) {
  if (n_steps < 1) {
    throw PercycleError(ErrorCode::precondition,
                        "integrate_rk4 needs at least one step");
  }
  const double h = (t1 - t0) / n_steps;
  State5 y = y0;
  for (int k = 0; k < n_steps; ++k) {
    const double t = t0 + k * h;
    const State5 k1 = f(t, y);
    const State5 k2 = f(t + 0.5 * h, axpy(y, 0.5 * h, k1));
    const State5 k3 = f(t + 0.5 * h, axpy(y, 0.5 * h, k2));
    const State5 k4 = f(t + h, axpy(y, h, k3));
    for (std::size_t i = 0; i < 5; ++i) {
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
  }
  return y;
}

FieldFn model_field(const ParamSet& p) {
  return [p](double t, const State5& x) { return rhs(p, t, x); };
}

}  // namespace percycle::solver
