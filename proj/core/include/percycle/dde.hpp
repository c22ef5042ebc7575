#pragma once

#include "percycle/integrate.hpp"
#include "percycle/params.hpp"

namespace percycle::solver {

struct DdeOptions {
  IntegratorOptions integrator{};
  double overlap_threshold = 1e-3;  // below this tau, switch stepping mode
  int max_overlap_sweeps = 4;       // fixed-point sweeps per overlap step
};

struct DdeResult {
  DenseOutput dense;      // covers [0, t_end]
  State5 final_state{};
  long n_chunks = 0;      // delay-length intervals integrated (chunked mode)
  bool overlap_mode = false;
};

// Integrates the delayed model by the method of steps: the repression
// argument reads PN at t - tau from the history (t <= tau) or from the
// dense output already built. For tau at or above overlap_threshold the
// time axis is cut into delay-length chunks so each chunk only reads
// completed data. For smaller tau the integrator steps freely past the
// delay and resolves the self-reference of each step by a few fixed-point
// sweeps over the step's own interpolant.
DdeResult simulate_dde(const ParamSet& p, const HistorySet& history,
                       double t_end, const DdeOptions& opt = {});

// max over [a, b] of |x(t) - x(t - T)|_inf sampled from the dense output;
// both t and t - T must lie inside the covered span.
double periodicity_defect(const DenseOutput& dense, double T, double a,
                          double b, int samples = 2048);

}  // namespace percycle::solver
