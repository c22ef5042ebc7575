#include "percycle/model.hpp"

#include <cmath>
#include <string>

#include "percycle/errors.hpp"

namespace percycle {

double hill_repression(double V_S, double K_I, double n, double PN) {
  double Kn = std::pow(K_I, n);
  double Pn = std::pow(PN, n);
  if (std::isinf(Kn) || std::isinf(Pn)) {
    // K^n / (K^n + P^n) == r / (r + 1) with r = (K/P)^n; immune to overflow
    // of the individual powers.
    double r = std::pow(K_I / PN, n);
    if (std::isinf(r)) return V_S;
    return V_S * (r / (r + 1.0));
  }
  return V_S * (Kn / (Kn + Pn));
}

double mm(double V, double K, double s) { return V * s / (K + s); }

CoeffValues eval_coeffs(const ParamSet& p, double t) {
  CoeffValues c;
  c.V_S = p.V_S.eval(t, p.T);
  c.V_m = p.V_m.eval(t, p.T);
  c.K_m1 = p.K_m1.eval(t, p.T);
  c.K_I = p.K_I.eval(t, p.T);
  c.K_s = p.K_s.eval(t, p.T);
  c.V_1 = p.V_1.eval(t, p.T);
  c.V_2 = p.V_2.eval(t, p.T);
  c.V_3 = p.V_3.eval(t, p.T);
  c.V_4 = p.V_4.eval(t, p.T);
  c.K_1 = p.K_1.eval(t, p.T);
  c.K_2 = p.K_2.eval(t, p.T);
  c.K_3 = p.K_3.eval(t, p.T);
  c.K_4 = p.K_4.eval(t, p.T);
  c.V_d = p.V_d.eval(t, p.T);
  c.K_d = p.K_d.eval(t, p.T);
  c.k_1 = p.k_1.eval(t, p.T);
  c.k_2 = p.k_2.eval(t, p.T);
  return c;
}

State5 clamp_state(const State5& x) {
  State5 y = x;
  for (std::size_t i = 0; i < 5; ++i) {
    if (y[i] < 0.0) {
      if (y[i] >= -1e-12) {
        y[i] = 0.0;
      } else {
        throw PercycleError(ErrorCode::domain_error,
                            "state component " + std::to_string(i) +
                                " is negative: " + std::to_string(y[i]));
      }
    }
  }
  return y;
}

State5 rhs_from_values(const CoeffValues& c, double n, const State5& x,
                       double PN_for_hill) {
  const double M = x[0], P0 = x[1], P1 = x[2], P2 = x[3], PN = x[4];
  const double v1 = c.V_1 * P0 / (c.K_1 + P0);
  const double v2 = c.V_2 * P1 / (c.K_2 + P1);
  const double v3 = c.V_3 * P1 / (c.K_3 + P1);
  const double v4 = c.V_4 * P2 / (c.K_4 + P2);
  const double vd = c.V_d * P2 / (c.K_d + P2);
  State5 f;
  f[0] = hill_repression(c.V_S, c.K_I, n, PN_for_hill) -
         c.V_m * M / (c.K_m1 + M);
  f[1] = c.K_s * M - v1 + v2;
  f[2] = v1 - v2 - v3 + v4;
  f[3] = v3 - v4 - c.k_1 * P2 + c.k_2 * PN - vd;
  f[4] = c.k_1 * P2 - c.k_2 * PN;
  return f;
}

State5 rhs(const ParamSet& p, double t, const State5& x) {
  State5 y = clamp_state(x);
  return rhs_from_values(eval_coeffs(p, t), p.n, y, y[4]);
}

State5 rhs_delayed(const ParamSet& p, double t, const State5& x,
                   double PN_delayed) {
  State5 y = clamp_state(x);
  if (PN_delayed < 0.0) {
    PN_delayed = PN_delayed >= -1e-12
                     ? 0.0
                     : throw PercycleError(ErrorCode::domain_error,
                                           "delayed PN is negative");
  }
  return rhs_from_values(eval_coeffs(p, t), p.n, y, PN_delayed);
}

}  // namespace percycle
