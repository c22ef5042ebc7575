#pragma once

#include <optional>
#include <string>

#include "percycle/bounds.hpp"
#include "percycle/degree.hpp"
#include "percycle/dde.hpp"
#include "percycle/params.hpp"
#include "percycle/shooting.hpp"

namespace percycle {

// Every numeric knob of the pipeline, with the shipped defaults. Configs
// may override any subset under the "numerics" key.
struct NumericsConfig {
  int grid_n = 2048;
  int quad_n = 256;
  int face_grid = 5;
  int lambda_grid = 11;
  int boundary_grid = 5;
  double extrema_margin = 0.01;
  double inversion_tol = 1e-10;
  double cap_safety = 0.01;
  double homotopy_floor = 1e-12;
  double marginal_threshold = 1e-9;
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  double newton_tol = 1e-9;
  int newton_max_iter = 50;
  int fallback_periods = 50;
  int verify_samples = 512;

  bounds::BoundsOptions bounds_options() const;
  degree::CertOptions cert_options() const;
  solver::IntegratorOptions integrator_options() const;
  solver::ShootingOptions shooting_options() const;
  solver::DdeOptions dde_options() const;
};

struct SweepConfig {
  std::string parameter;  // "V_m" (constant) or "V_S.offset" (sinusoid field)
  double from = 0.0;
  double to = 0.0;
  int count = 0;
  std::string command;  // "check" or "bounds"
};

struct RunConfig {
  double t_end = 45.0;
  int out_points = 2000;
  unsigned long long seed = 0;
  std::optional<State5> x0;
  std::optional<SweepConfig> sweep;
};

struct Config {
  ParamSet model;
  HistorySet history;
  bool has_history = false;
  NumericsConfig numerics;
  RunConfig run;
};

// Strict JSON loading: unknown keys are rejected by name, parse errors are
// reported with a line number, and the model is validated before returning.
// Throws PercycleError{config_error | io_error | invalid_*}.
Config load_config(const std::string& path);
Config parse_config(const std::string& text, const std::string& origin);

// The compiled-in default scenario (same content as the shipped config).
Config builtin_config();

// Serialization of a config back to canonical JSON (round-trip tests).
std::string dump_config(const Config& cfg);

}  // namespace percycle
