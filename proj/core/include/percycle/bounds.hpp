#pragma once

#include <functional>

#include "percycle/params.hpp"

namespace percycle::bounds {

struct BoundsOptions {
  int grid_n = 2048;            // samples per period for extrema / envelope scans
  int quad_n = 256;             // Simpson subintervals for time averages
  double extrema_margin = 0.01; // widening of sampled (non-closed-form) extrema
  double inversion_tol = 1e-10; // relative tolerance of the scalar inversions
  double cap_safety = 0.01;     // relative headroom on the exchange cap
};

// One smallness condition lhs < rhs. Later conditions are only evaluated
// once every earlier one holds, because their inputs come from the earlier
// bounds.
struct HypothesisCheck {
  bool evaluated = false;
  bool passed = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin() const { return rhs - lhs; }
};

struct HypothesesReport {
  HypothesisCheck h1;  // peak transcription below minimal mRNA turnover
  HypothesisCheck h2;  // P0 influx ceiling below minimal forward rate
  HypothesisCheck h3;  // P1 influx ceiling below minimal total P1 drain
  HypothesisCheck h4;  // P2 influx ceiling below minimal total P2 drain
  bool all_passed = false;
};

HypothesesReport check_hypotheses(const ParamSet& p,
                                  const BoundsOptions& opt = {});

// A-priori ceilings for each state along H1..H4, together with the
// Gronwall-rate diagnostics and the exchange-cap construction that closes
// the chain for the tail states.
struct UpperBounds {
  double M = 0.0;
  double P0 = 0.0;
  double P1 = 0.0;
  double P_tilde = 0.0;          // drain-balance ceiling for P2 alone
  double C = 0.0;                // worst-case relative outflow rate of the tail
  double gronwall_exponent = 0.0;  // C * T
  double gronwall_p2 = 0.0;        // e^{C T} * P_tilde (diagnostic; may overflow)
  double cap_PN = 0.0;             // exchange-equilibrium ceiling for PN
  double P2 = 0.0;
  double PN = 0.0;
  double A_face = 0.0;             // averaged influx into P2 at the P1 ceiling
  double drain_avg_at_P2 = 0.0;    // averaged outflux at the P2 ceiling
  double window_width = 0.0;       // slack drain_avg_at_P2 - A_face (> 0)
};

// Positive floors obtained by running the chain downward from the PN
// ceiling (maximal repression), with the exponential shrink applied to the
// tail states.
struct LowerBounds {
  double r = 0.0;        // transcription floor at maximal repression
  double M = 0.0;
  double P0 = 0.0;
  double P1 = 0.0;
  double P_tilde2 = 0.0;  // pre-shrink floor for P2
  double P2 = 0.0;
  double PN = 0.0;
};

// Both throw PercycleError{hypothesis_failed} when the chain's smallness
// conditions do not hold; pass a precomputed report to avoid rechecking.
UpperBounds upper_bounds(const ParamSet& p, const BoundsOptions& opt = {});
UpperBounds upper_bounds(const ParamSet& p, const HypothesesReport& hyp,
                         const BoundsOptions& opt);
LowerBounds lower_bounds(const ParamSet& p, const UpperBounds& up,
                         const BoundsOptions& opt = {});

struct Box5 {
  State5 lower{};
  State5 upper{};
  State5 center() const;
  bool contains(const State5& x) const;  // closed box membership
};

enum class ShrinkPolicy { none, halve_lower };

struct BoxResult {
  HypothesesReport hypotheses;
  UpperBounds upper;
  LowerBounds lower;
  Box5 box;
  int shrink_count = 0;  // times the lower corner was halved to clear faces
};

// Assembles the candidate box from the two chains. With halve_lower the
// lower corner is halved (all five coordinates at once, at most 60 times)
// until every lower-face sign condition holds; the upper faces are never
// adjusted. Throws bounds_unavailable when shrinking runs out of room.
BoxResult build_box(const ParamSet& p, const BoundsOptions& opt = {},
                    ShrinkPolicy policy = ShrinkPolicy::halve_lower);

// --- scalar helpers (exposed for tests) ---

// Solve V * x / (K + x) = target for x; requires 0 <= target < V.
double invert_mm(double V, double K, double target);

// Bisection for continuous increasing f with f(0) <= target: brackets by
// doubling from 1, then bisects to relative tolerance tol. Throws
// no_solution when no bracket is found within 64 doublings.
double invert_increasing(const std::function<double(double)>& f,
                         double target, double tol);

}  // namespace percycle::bounds
