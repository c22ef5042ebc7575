#include "percycle/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "percycle/bounds.hpp"
#include "percycle/config.hpp"
#include "percycle/dde.hpp"
#include "percycle/degree.hpp"
#include "percycle/errors.hpp"
#include "percycle/integrate.hpp"
#include "percycle/model.hpp"
#include "percycle/report.hpp"
#include "percycle/shooting.hpp"

namespace percycle::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kStateNames[5] = {"M", "P0", "P1", "P2", "PN"};

ordered_json state_json(const State5& x) {
  return ordered_json{x[0], x[1], x[2], x[3], x[4]};
}

ordered_json number_or_null(double v) {
  if (std::isfinite(v)) return ordered_json(v);
  return ordered_json(nullptr);
}

ordered_json check_json(const bounds::HypothesisCheck& c) {
  ordered_json j;
  j["evaluated"] = c.evaluated;
  j["passed"] = c.passed;
  if (c.evaluated) {
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["margin"] = c.margin();
  }
  return j;
}

ordered_json hypotheses_json(const bounds::HypothesesReport& h) {
  ordered_json j;
  j["h1"] = check_json(h.h1);
  j["h2"] = check_json(h.h2);
  j["h3"] = check_json(h.h3);
  j["h4"] = check_json(h.h4);
  j["all_passed"] = h.all_passed;
  return j;
}

ordered_json upper_json(const bounds::UpperBounds& u) {
  ordered_json j;
  j["M"] = u.M;
  j["P0"] = u.P0;
  j["P1"] = u.P1;
  j["P_tilde"] = u.P_tilde;
  j["C"] = u.C;
  j["gronwall_exponent"] = u.gronwall_exponent;
  j["gronwall_p2"] = number_or_null(u.gronwall_p2);
  j["cap_PN"] = u.cap_PN;
  j["P2"] = u.P2;
  j["PN"] = u.PN;
  j["A_face"] = u.A_face;
  j["drain_avg_at_P2"] = u.drain_avg_at_P2;
  j["window_width"] = u.window_width;
  return j;
}

ordered_json lower_json(const bounds::LowerBounds& l) {
  ordered_json j;
  j["r"] = l.r;
  j["M"] = l.M;
  j["P0"] = l.P0;
  j["P1"] = l.P1;
  j["P_tilde2"] = l.P_tilde2;
  j["P2"] = l.P2;
  j["PN"] = l.PN;
  return j;
}

ordered_json box_json(const bounds::Box5& b) {
  ordered_json j;
  j["lower"] = state_json(b.lower);
  j["upper"] = state_json(b.upper);
  j["center"] = state_json(b.center());
  return j;
}

ordered_json certificate_json(const degree::Certificate& c) {
  ordered_json faces = ordered_json::array();
  for (const auto& f : c.faces) {
    ordered_json fj;
    fj["name"] = std::string(kStateNames[f.coord]) + (f.upper ? "_upper" : "_lower");
    fj["coord"] = f.coord;
    fj["side"] = f.upper ? "upper" : "lower";
    fj["required_sign"] = f.required_sign;
    fj["worst_value"] = f.worst_value;
    fj["worst_point"] = state_json(f.worst_point);
    fj["pass"] = f.pass;
    fj["marginal"] = f.marginal;
    faces.push_back(std::move(fj));
  }
  ordered_json j;
  j["faces"] = std::move(faces);
  ordered_json hj;
  hj["min_norm"] = c.homotopy_min_norm;
  hj["nonvanishing"] = c.homotopy_nonvanishing;
  j["homotopy"] = std::move(hj);
  j["verdict"] = c.verdict;
  j["degree"] = c.verdict ? ordered_json(-1) : ordered_json(nullptr);
  return j;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(1) << "\n"; }

int run_check(const Config& cfg, std::ostream& out) {
  auto hyp = bounds::check_hypotheses(cfg.model, cfg.numerics.bounds_options());
  ordered_json j;
  j["command"] = "check";
  j["period"] = cfg.model.T;
  j["hypotheses"] = hypotheses_json(hyp);
  emit(out, j);
  return hyp.all_passed ? exit_ok : exit_not_certified;
}

// Shared by bounds/certify: report skeleton with hypotheses, plus the box when
// they hold.  Returns true when the box was produced.
bool bounds_section(const Config& cfg, ordered_json& j, bounds::BoxResult& bx) {
  auto bopt = cfg.numerics.bounds_options();
  auto hyp = bounds::check_hypotheses(cfg.model, bopt);
  j["period"] = cfg.model.T;
  j["hypotheses"] = hypotheses_json(hyp);
  if (!hyp.all_passed) {
    j["upper"] = nullptr;
    j["lower"] = nullptr;
    j["box"] = nullptr;
    j["shrink_count"] = nullptr;
    return false;
  }
  bx = bounds::build_box(cfg.model, bopt);
  j["upper"] = upper_json(bx.upper);
  j["lower"] = lower_json(bx.lower);
  j["box"] = box_json(bx.box);
  j["shrink_count"] = bx.shrink_count;
  return true;
}

int run_bounds(const Config& cfg, std::ostream& out) {
  ordered_json j;
  j["command"] = "bounds";
  bounds::BoxResult bx;
  bool ok = bounds_section(cfg, j, bx);
  emit(out, j);
  return ok ? exit_ok : exit_not_certified;
}

int run_certify(const Config& cfg, std::ostream& out) {
  ordered_json j;
  j["command"] = "certify";
  bounds::BoxResult bx;
  if (!bounds_section(cfg, j, bx)) {
    j["certificate"] = nullptr;
    emit(out, j);
    return exit_not_certified;
  }
  auto cert = degree::certify_box(cfg.model, bx.box, cfg.numerics.cert_options());
  j["certificate"] = certificate_json(cert);
  emit(out, j);
  return cert.verdict ? exit_ok : exit_not_certified;
}

ordered_json orbit_json(const solver::OrbitResult& orbit) {
  ordered_json j;
  j["converged"] = true;
  j["x_star"] = state_json(orbit.x_star);
  j["residual_norm"] = orbit.residual_norm;
  j["newton_iterations"] = orbit.newton_iterations;
  j["used_fallback"] = orbit.used_fallback;
  j["residual_history"] = ordered_json(orbit.residual_history);
  ordered_json mults = ordered_json::array();
  for (const auto& mu : orbit.floquet.multipliers) {
    ordered_json m;
    m["re"] = mu.real();
    m["im"] = mu.imag();
    m["abs"] = std::abs(mu);
    mults.push_back(std::move(m));
  }
  j["multipliers"] = std::move(mults);
  j["max_multiplier"] = orbit.floquet.max_abs;
  return j;
}

ordered_json verify_json(const solver::OrbitCheck& chk) {
  ordered_json j;
  j["inside_box"] = chk.inside_box;
  j["positive"] = chk.positive;
  j["defect"] = chk.defect;
  j["defect_limit"] = chk.defect_limit;
  j["min_coord"] = chk.min_coord;
  j["max_coord"] = chk.max_coord;
  j["pass"] = chk.pass;
  return j;
}

int run_solve(const Config& cfg, std::ostream& out) {
  ordered_json j;
  j["command"] = "solve";
  bounds::BoxResult bx;
  if (!bounds_section(cfg, j, bx)) {
    j["orbit"] = nullptr;
    j["verify"] = nullptr;
    emit(out, j);
    return exit_not_certified;
  }

  auto sopt = cfg.numerics.shooting_options();
  std::mt19937_64 rng(cfg.run.seed);
  auto random_start = [&]() {
    State5 x;
    for (int i = 0; i < 5; ++i) {
      std::uniform_real_distribution<double> dist(bx.box.lower[i], bx.box.upper[i]);
      x[i] = dist(rng);
    }
    return x;
  };

  State5 start = cfg.run.x0 ? *cfg.run.x0 : bx.box.center();
  constexpr int kMaxAttempts = 9;
  int retries = 0;
  bool converged = false;
  std::string last_error;
  solver::OrbitResult orbit;
  solver::OrbitCheck chk;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    if (attempt > 0) {
      start = random_start();
      ++retries;
    }
    try {
      orbit = solver::find_periodic_orbit(cfg.model, start, sopt);
    } catch (const PercycleError& e) {
      if (e.code() == ErrorCode::newton_failure) {
        last_error = e.what();
        continue;
      }
      throw;
    }
    converged = true;
    chk = solver::verify_orbit(cfg.model, orbit.x_star, bx.box, sopt);
    if (chk.pass) break;
  }

  if (!converged) {
    ordered_json oj;
    oj["converged"] = false;
    oj["message"] = last_error;
    j["orbit"] = std::move(oj);
    j["verify"] = nullptr;
    j["retries"] = retries;
    emit(out, j);
    return exit_not_certified;
  }

  j["orbit"] = orbit_json(orbit);
  j["verify"] = verify_json(chk);
  j["retries"] = retries;
  emit(out, j);
  return chk.pass ? exit_ok : exit_not_certified;
}

int run_simulate(const Config& cfg, std::ostream& out) {
  const double t_end = cfg.run.t_end;
  if (!(t_end > 0.0))
    throw PercycleError(ErrorCode::config_error, "run.t_end must be positive for simulate");
  if (cfg.model.tau > 0.0) {
    if (!cfg.has_history)
      throw PercycleError(ErrorCode::config_error,
                          "simulate with a positive delay needs model.history");
    auto res = solver::simulate_dde(cfg.model, cfg.history, t_end, cfg.numerics.dde_options());
    report::write_csv(out, res.dense, 0.0, t_end, cfg.run.out_points);
  } else {
    State5 x0;
    if (cfg.run.x0) {
      x0 = *cfg.run.x0;
    } else if (cfg.has_history) {
      x0 = cfg.history.eval(0.0, cfg.model.T);
    } else {
      throw PercycleError(ErrorCode::config_error,
                          "simulate needs run.x0 or model.history for the initial state");
    }
    solver::DenseOutput dense;
    solver::integrate(solver::model_field(cfg.model), 0.0, t_end, x0,
                      cfg.numerics.integrator_options(), &dense);
    report::write_csv(out, dense, 0.0, t_end, cfg.run.out_points);
  }
  return exit_ok;
}

void set_swept_parameter(ParamSet& p, const std::string& spec, double value) {
  const auto dot = spec.find('.');
  const std::string name = dot == std::string::npos ? spec : spec.substr(0, dot);
  const CoefficientEntry* entry = nullptr;
  for (const auto& e : coefficient_table()) {
    if (name == e.name) {
      entry = &e;
      break;
    }
  }
  if (entry == nullptr)
    throw PercycleError(ErrorCode::config_error,
                        "sweep parameter \"" + name + "\" is not a model coefficient");
  PeriodicCoefficient& c = p.*(entry->member);
  if (dot == std::string::npos) {
    if (c.kind() != CoefficientKind::constant)
      throw PercycleError(ErrorCode::config_error,
                          "sweep over \"" + name +
                              "\" needs a constant coefficient; use \"" + name +
                              ".<field>\" for a sinusoid");
    c = PeriodicCoefficient::constant(value);
    return;
  }
  const std::string field = spec.substr(dot + 1);
  const auto* s = c.get_if<SinusoidSpec>();
  if (s == nullptr)
    throw PercycleError(ErrorCode::config_error,
                        "sweep over \"" + spec + "\" needs a sinusoid coefficient");
  SinusoidSpec ns = *s;
  if (field == "offset") {
    ns.offset = value;
  } else if (field == "amplitude") {
    ns.amplitude = value;
  } else if (field == "omega") {
    ns.omega = value;
  } else if (field == "phase") {
    ns.phase = value;
  } else {
    throw PercycleError(ErrorCode::config_error,
                        "unknown sinusoid field \"" + field + "\" in sweep parameter");
  }
  c = PeriodicCoefficient(ns);
}

int run_sweep(const Config& cfg, std::ostream& out) {
  if (!cfg.run.sweep)
    throw PercycleError(ErrorCode::config_error, "sweep needs run.sweep in the config");
  const SweepConfig& sw = *cfg.run.sweep;

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(sw.count));
  for (int k = 0; k < sw.count; ++k) {
    values.push_back(sw.count == 1
                         ? sw.from
                         : sw.from + (sw.to - sw.from) * static_cast<double>(k) /
                               static_cast<double>(sw.count - 1));
  }
  std::sort(values.begin(), values.end());

  ordered_json rows = ordered_json::array();
  for (double v : values) {
    ordered_json row;
    row["value"] = v;
    try {
      ParamSet model = cfg.model;
      set_swept_parameter(model, sw.parameter, v);
      model.validate();
      if (sw.command == "check") {
        auto hyp = bounds::check_hypotheses(model, cfg.numerics.bounds_options());
        row["all_passed"] = hyp.all_passed;
      } else {
        auto bx = bounds::build_box(model, cfg.numerics.bounds_options());
        row["ok"] = true;
        row["window_width"] = bx.upper.window_width;
        row["shrink_count"] = bx.shrink_count;
      }
    } catch (const PercycleError& e) {
      if (e.code() == ErrorCode::config_error) throw;  // malformed sweep spec, not a data point
      row[sw.command == "check" ? "all_passed" : "ok"] = false;
      row["error"] = e.what();
    }
    rows.push_back(std::move(row));
  }

  ordered_json j;
  j["command"] = "sweep";
  j["parameter"] = sw.parameter;
  j["inner_command"] = sw.command;
  j["rows"] = std::move(rows);
  emit(out, j);
  return exit_ok;
}

struct CliOptions {
  std::string config_path;
  std::string out_path;
  double tau = 0.0;
  double t_end = 0.0;
  long long seed = 0;
};

void add_common_options(CLI::App* sub, CliOptions& o) {
  sub->add_option("--config", o.config_path, "Path to a JSON config file");
  sub->add_option("--out", o.out_path, "Write the report to this file instead of stdout");
  sub->add_option("--tau", o.tau, "Override the transcription delay");
  sub->add_option("--t-end", o.t_end, "Override the simulation end time");
  sub->add_option("--seed", o.seed, "Override the retry RNG seed");
}

}  // namespace

int run_command(const std::string& command, const Config& cfg, std::ostream& out) {
  if (command == "check") return run_check(cfg, out);
  if (command == "bounds") return run_bounds(cfg, out);
  if (command == "certify") return run_certify(cfg, out);
  if (command == "solve") return run_solve(cfg, out);
  if (command == "simulate") return run_simulate(cfg, out);
  if (command == "sweep") return run_sweep(cfg, out);
  throw PercycleError(ErrorCode::config_error, "unknown command \"" + command + "\"");
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic-forcing analysis of a five-state circadian oscillator"};
  app.name("percycle");
  app.require_subcommand(1);

  static const char* kCommands[] = {"check", "bounds", "certify", "solve", "simulate", "sweep"};
  static const char* kDescriptions[] = {
      "Evaluate the averaged-inflow hypotheses",
      "Build the trapping box from the hypothesis chain",
      "Certify the degree conditions on the box faces",
      "Locate the positive periodic orbit by shooting",
      "Integrate the model and write a CSV trajectory",
      "Re-run check or bounds over a parameter range"};

  CliOptions o;
  std::vector<CLI::App*> subs;
  for (int i = 0; i < 6; ++i) {
    CLI::App* sub = app.add_subcommand(kCommands[i], kDescriptions[i]);
    add_common_options(sub, o);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    const std::string msg = e.what();
    out << report::error_json(ErrorCode::config_error, msg) << "\n";
    err << "error: " << msg << "\n";
    return exit_error;
  }

  CLI::App* active = app.get_subcommands().front();
  const std::string command = active->get_name();

  std::ostringstream buffer;
  int code = exit_error;
  try {
    Config cfg = o.config_path.empty() ? builtin_config() : load_config(o.config_path);
    if (active->count("--tau") > 0) cfg.model.tau = o.tau;
    if (active->count("--t-end") > 0) cfg.run.t_end = o.t_end;
    if (active->count("--seed") > 0) cfg.run.seed = static_cast<std::uint64_t>(o.seed);
    cfg.model.validate();
    code = run_command(command, cfg, buffer);
  } catch (const PercycleError& e) {
    buffer.str("");
    buffer << report::error_json(e.code(), e.what()) << "\n";
    err << "error: " << e.what() << "\n";
    code = exit_error;
  } catch (const std::exception& e) {
    buffer.str("");
    buffer << report::error_json(ErrorCode::internal, e.what()) << "\n";
    err << "error: " << e.what() << "\n";
    code = exit_error;
  }

  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
      const std::string msg = "cannot open output file: " + o.out_path;
      out << report::error_json(ErrorCode::io_error, msg) << "\n";
      err << "error: " << msg << "\n";
      return exit_error;
    }
    f << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace percycle::cli
