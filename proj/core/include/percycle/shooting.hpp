#pragma once

#include <complex>
#include <vector>

#include "percycle/bounds.hpp"
#include "percycle/integrate.hpp"
#include "percycle/params.hpp"

namespace percycle::solver {

struct ShootingOptions {
  IntegratorOptions integrator{};
  double newton_tol = 1e-9;  // infinity norm of the period-map residual
  int newton_max_iter = 50;
  int fallback_periods = 50;  // forward-integration burn-in on Newton stall
  int verify_samples = 512;
};

struct FloquetData {
  // Eigenvalues of the one-period variational (monodromy) matrix, ordered
  // by decreasing magnitude.
  std::array<std::complex<double>, 5> multipliers{};
  double max_abs = 0.0;
};

struct OrbitResult {
  State5 x_star{};            // fixed point of the period map
  double residual_norm = 0.0; // final |P(x*) - x*|_inf
  std::vector<double> residual_history;
  int newton_iterations = 0;
  bool used_fallback = false;
  FloquetData floquet{};
};

// State after one period: the flow of the model field from x over [0, T].
State5 poincare_map(const ParamSet& p, const State5& x,
                    const IntegratorOptions& opt);

// Damped Newton on F(x) = P(x) - x with a forward-difference Jacobian.
// A stall (damping exhausted, no relative progress over a window, or the
// iteration budget) is retried once after integrating fallback_periods
// periods from the current best iterate; a second stall throws
// newton_failure carrying the best residual seen. The monodromy matrix is
// re-assembled at the converged point for the Floquet multipliers.
OrbitResult find_periodic_orbit(const ParamSet& p, const State5& x0,
                                const ShootingOptions& opt = {});

struct OrbitCheck {
  bool inside_box = false;
  bool positive = false;
  double defect = 0.0;  // |x(T) - x(0)|_inf on the verification pass
  double defect_limit = 0.0;
  State5 min_coord{};
  State5 max_coord{};
  bool pass = false;
};

// Re-integrates one period from x_star and checks closed-box containment,
// strict positivity, and the periodicity defect against 10x the Newton
// tolerance, sampling the dense output at verify_samples points.
OrbitCheck verify_orbit(const ParamSet& p, const State5& x_star,
                        const bounds::Box5& box, const ShootingOptions& opt = {});

}  // namespace percycle::solver
