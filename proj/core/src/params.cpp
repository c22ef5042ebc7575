#include "percycle/params.hpp"

#include <cmath>

#include "percycle/errors.hpp"

namespace percycle {

namespace {
constexpr double kHalfPi = 1.5707963267948966;
constexpr double kTwoPi = 6.283185307179586;
}  // namespace

const std::array<CoefficientEntry, kCoefficientCount>& coefficient_table() {
  static const std::array<CoefficientEntry, kCoefficientCount> table = {{
      {"V_S", &ParamSet::V_S},
      {"V_m", &ParamSet::V_m},
      {"V_1", &ParamSet::V_1},
      {"V_2", &ParamSet::V_2},
      {"V_3", &ParamSet::V_3},
      {"V_4", &ParamSet::V_4},
      {"V_d", &ParamSet::V_d},
      {"K_I", &ParamSet::K_I},
      {"K_1", &ParamSet::K_1},
      {"K_2", &ParamSet::K_2},
      {"K_3", &ParamSet::K_3},
      {"K_4", &ParamSet::K_4},
      {"K_d", &ParamSet::K_d},
      {"K_m1", &ParamSet::K_m1},
      {"K_s", &ParamSet::K_s},
      {"k_1", &ParamSet::k_1},
      {"k_2", &ParamSet::k_2},
  }};
  return table;
}

void ParamSet::validate() const {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw PercycleError(ErrorCode::invalid_params, "period T must be positive");
  }
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw PercycleError(ErrorCode::invalid_params,
                        "Hill exponent n must be positive");
  }
  if (tau < 0.0 || !std::isfinite(tau)) {
    throw PercycleError(ErrorCode::invalid_params,
                        "delay tau must be nonnegative");
  }
  for (const auto& entry : coefficient_table()) {
    (this->*entry.member).validate(entry.name, T, /*require_positive=*/true);
  }
}

State5 HistorySet::eval(double t, double period) const {
  return {M.eval(t, period), P0.eval(t, period), P1.eval(t, period),
          P2.eval(t, period), PN.eval(t, period)};
}

void HistorySet::validate(double period) const {
  M.validate("history.M", period, /*require_positive=*/false);
  P0.validate("history.P0", period, false);
  P1.validate("history.P1", period, false);
  P2.validate("history.P2", period, false);
  PN.validate("history.PN", period, false);
}

ParamSet builtin_example() {
  ParamSet p;
  p.V_S = PeriodicCoefficient::sinusoid(1.26, 0.2);
  p.V_m = PeriodicCoefficient::constant(2.0);
  p.V_1 = PeriodicCoefficient::constant(7.2);
  p.V_2 = PeriodicCoefficient::sinusoid(3.0, 1.0, 1.0, kHalfPi);   // 3 + cos t
  p.V_3 = PeriodicCoefficient::constant(10.0);
  p.V_4 = PeriodicCoefficient::sinusoid(3.0, 0.5);
  p.V_d = PeriodicCoefficient::constant(7.35);
  p.K_I = PeriodicCoefficient::sinusoid(1.2, 1.0, 1.0, -kHalfPi);  // 1.2 - cos t
  p.K_1 = PeriodicCoefficient::constant(1.0);
  p.K_2 = PeriodicCoefficient::constant(5.0);
  p.K_3 = PeriodicCoefficient::constant(0.4);
  p.K_4 = PeriodicCoefficient::constant(2.0);
  p.K_d = PeriodicCoefficient::constant(0.2);
  p.K_m1 = PeriodicCoefficient::constant(1.5);
  p.K_s = PeriodicCoefficient::constant(0.38);
  p.k_1 = PeriodicCoefficient::sinusoid(1.9, -0.3);                // 1.9 - 0.3 sin t
  p.k_2 = PeriodicCoefficient::constant(1.3);
  p.n = 4.0;
  p.T = kTwoPi;
  p.tau = 0.1;
  return p;
}

HistorySet builtin_history() {
  HistorySet h;
  h.M = PeriodicCoefficient::sinusoid(1.0, -0.44);  // 1 - 0.44 sin t
  h.P0 = PeriodicCoefficient::constant(0.12);
  h.P1 = PeriodicCoefficient::constant(0.16);
  h.P2 = PeriodicCoefficient::constant(0.00215);
  h.PN = PeriodicCoefficient::constant(0.00327);
  return h;
}

}  // namespace percycle
