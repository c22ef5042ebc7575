#pragma once

#include <functional>
#include <vector>

#include "percycle/params.hpp"

namespace percycle::solver {

using FieldFn = std::function<State5(double, const State5&)>;

struct IntegratorOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  double initial_step = 0.0;  // 0 -> (t1 - t0) / 100
  double max_step = 0.0;      // 0 -> unlimited
  long max_steps = 2000000;
};

// One accepted step with the data needed for cubic Hermite interpolation.
struct StepRecord {
  double t0 = 0.0, t1 = 0.0;
  State5 y0{}, y1{};
  State5 f0{}, f1{};
};

// Cubic Hermite value on one step; t is clamped to [t0, t1].
State5 hermite_eval(const StepRecord& s, double t);

class DenseOutput {
 public:
  void clear() { steps_.clear(); }
  void push(const StepRecord& s) { steps_.push_back(s); }
  bool empty() const { return steps_.empty(); }
  double t_begin() const;
  double t_end() const;
  // Cubic Hermite evaluation on the step covering t (clamped to coverage).
  State5 eval(double t) const;
  const std::vector<StepRecord>& steps() const { return steps_; }

 private:
  const StepRecord& locate(double t) const;
  std::vector<StepRecord> steps_;
};

struct IntegrationStats {
  long n_accepted = 0;
  long n_rejected = 0;
  long n_rhs = 0;
};

// Adaptive embedded Runge-Kutta 5(4) (Dormand-Prince coefficients, FSAL).
// Steps that raise domain errors from the field are retried at half size.
// Throws step_failure when the step count budget is exhausted or the step
// size underflows.
State5 integrate(const FieldFn& f, double t0, double t1, const State5& y0,
                 const IntegratorOptions& opt, DenseOutput* dense = nullptr,
                 IntegrationStats* stats = nullptr);

// Fixed-step classical RK4; used by the order tests and as a cheap preview.
State5 integrate_rk4(const FieldFn& f, double t0, double t1, const State5& y0,
                     int n_steps);

// The model field t, x -> rhs(p, t, x) as a FieldFn.
FieldFn model_field(const ParamSet& p);

}  // namespace percycle::solver
