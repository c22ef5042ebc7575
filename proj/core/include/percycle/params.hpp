#pragma once

#include <array>
#include <cstddef>

#include "percycle/coefficient.hpp"

namespace percycle {

using State5 = std::array<double, 5>;

// Full parameter set of the periodically forced five-state oscillator
// (mRNA M, protein phosphoforms P0/P1/P2, nuclear pool PN). Every rate and
// Michaelis constant may vary periodically in time with the shared period T.
struct ParamSet {
  // Transcription drive and its repression.
  PeriodicCoefficient V_S;   // maximal transcription rate
  PeriodicCoefficient V_m;   // maximal mRNA degradation rate
  PeriodicCoefficient K_m1;  // mRNA degradation Michaelis constant
  PeriodicCoefficient K_I;   // repression threshold
  PeriodicCoefficient K_s;   // translation rate (first order)

  // Phosphorylation / dephosphorylation ladder.
  PeriodicCoefficient V_1;  // P0 -> P1 maximal rate
  PeriodicCoefficient V_2;  // P1 -> P0 maximal rate
  PeriodicCoefficient V_3;  // P1 -> P2 maximal rate
  PeriodicCoefficient V_4;  // P2 -> P1 maximal rate
  PeriodicCoefficient K_1;  // Michaelis constants of the four steps
  PeriodicCoefficient K_2;
  PeriodicCoefficient K_3;
  PeriodicCoefficient K_4;

  // P2 degradation and nuclear exchange.
  PeriodicCoefficient V_d;  // maximal P2 degradation rate
  PeriodicCoefficient K_d;  // its Michaelis constant
  PeriodicCoefficient k_1;  // entry rate P2 -> PN
  PeriodicCoefficient k_2;  // exit rate PN -> P2

  double n = 4.0;     // Hill exponent of the repression term
  double T = 0.0;     // common period of all coefficients
  double tau = 0.0;   // transcription delay (0 for the ODE model)

  // Throws PercycleError{invalid_params} on nonpositive T / n, negative tau,
  // or any coefficient failing its own validation.
  void validate() const;
};

// Name table in the canonical order used by configs and reports.
struct CoefficientEntry {
  const char* name;
  PeriodicCoefficient ParamSet::*member;
};

inline constexpr std::size_t kCoefficientCount = 17;
const std::array<CoefficientEntry, kCoefficientCount>& coefficient_table();

// Periodic history functions for the delayed model, one per state, sharing
// the model period. Values may touch zero (unlike coefficients).
struct HistorySet {
  PeriodicCoefficient M, P0, P1, P2, PN;

  State5 eval(double t, double period) const;
  void validate(double period) const;
};

// The forced parameter set used throughout the tests and shipped as the
// default config, period 2*pi, together with its delay history.
ParamSet builtin_example();
HistorySet builtin_history();

}  // namespace percycle
