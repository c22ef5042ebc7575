#include "percycle/bounds.hpp"

#include <cmath>
#include <limits>

#include "percycle/degree.hpp"
#include "percycle/errors.hpp"
#include "percycle/quadrature.hpp"

namespace percycle::bounds {

namespace {

double grid_min(const std::function<double(double)>& f, double T, int n) {
  double dt = T / n;
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) m = std::min(m, f(i * dt));
  return m;
}

double grid_max(const std::function<double(double)>& f, double T, int n) {
  double dt = T / n;
  double m = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) m = std::max(m, f(i * dt));
  return m;
}

HypothesisCheck make_check(double lhs, double rhs) {
  HypothesisCheck c;
  c.evaluated = true;
  c.lhs = lhs;
  c.rhs = rhs;
  c.passed = lhs < rhs;
  return c;
}

struct ChainState {
  HypothesesReport hyp;
  UpperBounds up;
  bool upper_complete = false;
  bool window_ok = false;
};

// Runs H1..H4 with the intermediate ceilings they feed on; when all four
// hold and want_upper is set, completes the ceiling chain for the tail
// states. Collects everything without throwing so the caller can decide
// what a failure means.
ChainState compute_chain(const ParamSet& p, const BoundsOptions& opt,
                         bool want_upper) {
  auto ex = [&](const PeriodicCoefficient& c) {
    return c.extrema(p.T, opt.grid_n, opt.extrema_margin);
  };
  const Extrema VS = ex(p.V_S), Vm = ex(p.V_m), Km1 = ex(p.K_m1),
                Ks = ex(p.K_s), V1 = ex(p.V_1), V2 = ex(p.V_2),
                V3 = ex(p.V_3), V4 = ex(p.V_4), K1 = ex(p.K_1),
                K3 = ex(p.K_3), Vd = ex(p.V_d), k1 = ex(p.k_1),
                k2 = ex(p.k_2);

  ChainState cs;
  UpperBounds& up = cs.up;

  cs.hyp.h1 = make_check(VS.hi, Vm.lo);
  if (!cs.hyp.h1.passed) return cs;
  up.M = invert_mm(Vm.lo, Km1.hi, VS.hi);

  const double h2_left = Ks.hi * up.M + V2.hi;
  cs.hyp.h2 = make_check(h2_left, V1.lo);
  if (!cs.hyp.h2.passed) return cs;
  up.P0 = invert_mm(V1.lo, K1.hi, h2_left);

  const double h3_left = V1.hi * up.P0 / (K1.lo + up.P0) + V4.hi;
  const double h3_right = grid_min(
      [&](double t) { return p.V_2.eval(t, p.T) + p.V_3.eval(t, p.T); }, p.T,
      opt.grid_n);
  cs.hyp.h3 = make_check(h3_left, h3_right);
  if (!cs.hyp.h3.passed) return cs;

  // Envelope of the total P1 drain, minimised pointwise over the period.
  auto g_env = [&](double P) {
    return grid_min(
        [&](double t) {
          return P * (p.V_2.eval(t, p.T) / (p.K_2.eval(t, p.T) + P) +
                      p.V_3.eval(t, p.T) / (p.K_3.eval(t, p.T) + P));
        },
        p.T, opt.grid_n);
  };
  up.P1 = invert_increasing(g_env, h3_left, opt.inversion_tol);

  const double h4_left = V3.hi * up.P1 / (K3.lo + up.P1);
  const double h4_right = grid_min(
      [&](double t) { return p.V_4.eval(t, p.T) + p.V_d.eval(t, p.T); }, p.T,
      opt.grid_n);
  cs.hyp.h4 = make_check(h4_left, h4_right);
  if (!cs.hyp.h4.passed) return cs;
  cs.hyp.all_passed = true;
  if (!want_upper) return cs;

  auto h_env = [&](double P) {
    return grid_min(
        [&](double t) {
          return P * (p.V_4.eval(t, p.T) / (p.K_4.eval(t, p.T) + P) +
                      p.V_d.eval(t, p.T) / (p.K_d.eval(t, p.T) + P));
        },
        p.T, opt.grid_n);
  };
  up.P_tilde = invert_increasing(h_env, h4_left, opt.inversion_tol);

  // Worst-case relative outflow rate of the P2/PN pair; the matching
  // exponential shrink is applied to the lower chain, and e^{CT} * P_tilde
  // is kept as a diagnostic of how hopeless the naive one-sided growth
  // estimate is over a full period.
  up.C = grid_max(
      [&](double t) {
        return p.k_1.eval(t, p.T) + p.V_4.eval(t, p.T) / p.K_4.eval(t, p.T) +
               p.V_d.eval(t, p.T) / p.K_d.eval(t, p.T);
      },
      p.T, opt.grid_n);
  up.gronwall_exponent = up.C * p.T;
  up.gronwall_p2 = std::exp(up.gronwall_exponent) * up.P_tilde;

  // Exchange cap: whenever PN sits above (max k1 / min k2) * P_tilde, the
  // exchange flux into PN is negative for every P2 below P_tilde, so PN is
  // pulled back under the cap; and P2 + PN cannot grow while P2 > P_tilde.
  // The safety factor keeps the face inequalities strict.
  up.cap_PN = (1.0 + opt.cap_safety) * (k1.hi / k2.lo) * up.P_tilde;
  up.P2 = up.P_tilde + up.cap_PN;

  up.A_face = periodic_average(
      [&](double t) {
        return p.V_3.eval(t, p.T) * up.P1 / (p.K_3.eval(t, p.T) + up.P1);
      },
      p.T, opt.quad_n);
  up.drain_avg_at_P2 = periodic_average(
      [&](double t) {
        return p.V_4.eval(t, p.T) * up.P2 / (p.K_4.eval(t, p.T) + up.P2) +
               p.V_d.eval(t, p.T) * up.P2 / (p.K_d.eval(t, p.T) + up.P2);
      },
      p.T, opt.quad_n);
  up.window_width = up.drain_avg_at_P2 - up.A_face;
  cs.upper_complete = true;
  if (!(up.window_width > 0.0)) return cs;
  cs.window_ok = true;

  const double k1_avg =
      periodic_average([&](double t) { return p.k_1.eval(t, p.T); }, p.T,
                       opt.quad_n);
  const double k2_avg =
      periodic_average([&](double t) { return p.k_2.eval(t, p.T); }, p.T,
                       opt.quad_n);
  up.PN = std::max(up.cap_PN,
                   (k1_avg * up.P2 + 0.5 * up.window_width) / k2_avg);
  return cs;
}

const char* first_failed_name(const HypothesesReport& h) {
  if (h.h1.evaluated && !h.h1.passed) return "h1";
  if (h.h2.evaluated && !h.h2.passed) return "h2";
  if (h.h3.evaluated && !h.h3.passed) return "h3";
  if (h.h4.evaluated && !h.h4.passed) return "h4";
  return "none";
}

UpperBounds finish_upper(const ChainState& cs) {
  if (!cs.hyp.all_passed) {
    throw PercycleError(ErrorCode::hypothesis_failed,
                        std::string("hypothesis ") + first_failed_name(cs.hyp) +
                            " does not hold");
  }
  if (!cs.window_ok) {
    throw PercycleError(ErrorCode::bounds_unavailable,
                        "averaged drain window is empty at the P2 ceiling");
  }
  return cs.up;
}

}  // namespace

double invert_mm(double V, double K, double target) {
  if (!(target >= 0.0)) {
    throw PercycleError(ErrorCode::precondition,
                        "invert_mm target must be nonnegative");
  }
  if (!(target < V)) {
    throw PercycleError(ErrorCode::no_solution,
                        "invert_mm target at or above the saturation level");
  }
  return K * target / (V - target);
}

double invert_increasing(const std::function<double(double)>& f,
                         double target, double tol) {
  if (target == 0.0) return 0.0;
  if (!(target > 0.0)) {
    throw PercycleError(ErrorCode::precondition,
                        "invert_increasing target must be nonnegative");
  }
  double hi = 1.0;
  for (int k = 0; f(hi) <= target; ++k) {
    if (k >= 64) {
      throw PercycleError(ErrorCode::no_solution,
                          "inversion target above the range of the function");
    }
    hi *= 2.0;
  }
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (f(mid) - target < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= tol * mid) break;
  }
  return 0.5 * (lo + hi);
}

HypothesesReport check_hypotheses(const ParamSet& p,
                                  const BoundsOptions& opt) {
  return compute_chain(p, opt, /*want_upper=*/false).hyp;
}

UpperBounds upper_bounds(const ParamSet& p, const BoundsOptions& opt) {
  return finish_upper(compute_chain(p, opt, /*want_upper=*/true));
}

UpperBounds upper_bounds(const ParamSet& p, const HypothesesReport& hyp,
                         const BoundsOptions& opt) {
  if (!hyp.all_passed) {
    throw PercycleError(ErrorCode::hypothesis_failed,
                        std::string("hypothesis ") + first_failed_name(hyp) +
                            " does not hold");
  }
  return upper_bounds(p, opt);
}

LowerBounds lower_bounds(const ParamSet& p, const UpperBounds& up,
                         const BoundsOptions& opt) {
  auto ex = [&](const PeriodicCoefficient& c) {
    return c.extrema(p.T, opt.grid_n, opt.extrema_margin);
  };
  const Extrema VS = ex(p.V_S), Vm = ex(p.V_m), Km1 = ex(p.K_m1),
                Ks = ex(p.K_s), V1 = ex(p.V_1), V2 = ex(p.V_2),
                V3 = ex(p.V_3), V4 = ex(p.V_4), K1 = ex(p.K_1),
                K2 = ex(p.K_2), K3 = ex(p.K_3), K4 = ex(p.K_4),
                Vd = ex(p.V_d), Kd = ex(p.K_d), KI = ex(p.K_I),
                k1 = ex(p.k_1), k2 = ex(p.k_2);

  LowerBounds lo;
  const double KIn = std::pow(KI.lo, p.n);
  lo.r = VS.lo * KIn / (KIn + std::pow(up.PN, p.n));
  if (!(lo.r < Vm.hi)) {
    throw PercycleError(ErrorCode::no_solution,
                        "transcription floor reaches the turnover ceiling");
  }
  lo.M = invert_mm(Vm.hi, Km1.lo, lo.r);

  const double s = Ks.lo * lo.M;
  if (!(s < V1.hi)) {
    throw PercycleError(ErrorCode::no_solution,
                        "translation floor reaches the forward-rate ceiling");
  }
  lo.P0 = invert_mm(V1.hi, K1.lo, s);

  const double B = V1.lo * lo.P0 / (K1.hi + lo.P0);
  if (!(B < V2.hi + V3.hi)) {
    throw PercycleError(ErrorCode::no_solution,
                        "P1 influx floor exceeds the maximal P1 drain");
  }
  auto g_bar = [&](double P) {
    return P * (V2.hi / (K2.lo + P) + V3.hi / (K3.lo + P));
  };
  lo.P1 = invert_increasing(g_bar, B, opt.inversion_tol);

  const double D = V3.lo * lo.P1 / (K3.hi + lo.P1);
  if (!(D < V4.hi + Vd.hi)) {
    throw PercycleError(ErrorCode::no_solution,
                        "P2 influx floor exceeds the maximal P2 drain");
  }
  auto h_bar = [&](double P) {
    return P * (V4.hi / (K4.lo + P) + Vd.hi / (Kd.lo + P));
  };
  lo.P_tilde2 = invert_increasing(h_bar, D, opt.inversion_tol);

  lo.P2 = std::exp(-up.C * p.T) * lo.P_tilde2;
  lo.PN = (k1.lo / k2.hi) * lo.P2;
  return lo;
}

State5 Box5::center() const {
  State5 c;
  for (std::size_t i = 0; i < 5; ++i) c[i] = (lower[i] + upper[i]) / 2.0;
  return c;
}

bool Box5::contains(const State5& x) const {
  for (std::size_t i = 0; i < 5; ++i) {
    if (x[i] < lower[i] || x[i] > upper[i]) return false;
  }
  return true;
}

BoxResult build_box(const ParamSet& p, const BoundsOptions& opt,
                    ShrinkPolicy policy) {
  ChainState cs = compute_chain(p, opt, /*want_upper=*/true);
  BoxResult res;
  res.hypotheses = cs.hyp;
  res.upper = finish_upper(cs);
  res.lower = lower_bounds(p, res.upper, opt);
  res.box.lower = {res.lower.M, res.lower.P0, res.lower.P1, res.lower.P2,
                   res.lower.PN};
  res.box.upper = {res.upper.M, res.upper.P0, res.upper.P1, res.upper.P2,
                   res.upper.PN};
  if (policy == ShrinkPolicy::none) return res;

  degree::CertOptions copt;
  copt.quad_n = opt.quad_n;
  for (int rounds = 0;; ++rounds) {
    auto faces = degree::face_reports(p, res.box, copt);
    // Halve only the coordinates whose own lower face fails.  Halving all
    // five together is not enough: when a lower bound sits exactly at the
    // balance point of a face whose inflow term scales with another lower
    // bound (e.g. the nuclear-import face, whose inflow and drain are both
    // linear in lower-bound coordinates), a uniform rescale of every lower
    // bound leaves that face value at zero forever.  Shrinking just the
    // failing coordinate breaks the balance: its drain term drops while the
    // inflow terms, frozen at the other coordinates' bounds, stay put.
    bool lower_ok = true;
    for (int j = 0; j < 5; ++j) lower_ok = lower_ok && faces[2 * j].pass;
    if (lower_ok) {
      res.shrink_count = rounds;
      return res;
    }
    if (rounds >= 60) {
      throw PercycleError(ErrorCode::bounds_unavailable,
                          "lower faces still fail after 60 halvings");
    }
    for (std::size_t i = 0; i < 5; ++i) {
      if (!faces[2 * i].pass) res.box.lower[i] *= 0.5;
    }
  }
}

}  // namespace percycle::bounds
