#pragma once

#include "percycle/params.hpp"

namespace percycle {

// Hill repression term V_S(t) * K^n / (K^n + P^n) evaluated safely: when
// either power overflows, the algebraically equivalent ratio form is used.
double hill_repression(double V_S, double K_I, double n, double PN);

// All seventeen coefficients at one time point. The averaged-field and
// delay loops evaluate these once per time node and reuse them across
// states, so the frozen-time rate expressions live in rhs_from_values.
struct CoeffValues {
  double V_S, V_m, K_m1, K_I, K_s;
  double V_1, V_2, V_3, V_4;
  double K_1, K_2, K_3, K_4;
  double V_d, K_d, k_1, k_2;
};

CoeffValues eval_coeffs(const ParamSet& p, double t);

// Clamps roundoff-negative entries (>= -1e-12) to zero; anything more
// negative throws PercycleError{domain_error}.
State5 clamp_state(const State5& x);

// The five rate expressions at a clamped state; PN_for_hill is the value
// fed to the repression term (the current PN, or a delayed one).
State5 rhs_from_values(const CoeffValues& c, double n, const State5& x,
                       double PN_for_hill);

// Michaelis-Menten flux V * s / (K + s).
double mm(double V, double K, double s);

// Right-hand side of the five-state model at time t. States are clamped to
// zero when within 1e-12 below it (integrator roundoff); anything more
// negative throws PercycleError{domain_error}.
State5 rhs(const ParamSet& p, double t, const State5& x);

// Same field with the delayed repression argument supplied explicitly
// (PN evaluated at t - tau by the caller). Used by the delay integrator.
State5 rhs_delayed(const ParamSet& p, double t, const State5& x,
                   double PN_delayed);

}  // namespace percycle
