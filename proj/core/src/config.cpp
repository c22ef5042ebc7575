#include "percycle/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "json.hpp"
#include "percycle/errors.hpp"

namespace percycle {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void cfg_fail(const std::string& msg) {
  throw PercycleError(ErrorCode::config_error, msg);
}

int line_of_byte(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

void check_keys(const ordered_json& obj, const std::string& ctx,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* a : allowed) {
      if (it.key() == a) {
        known = true;
        break;
      }
    }
    if (!known) cfg_fail("unknown key \"" + it.key() + "\" in " + ctx);
  }
}

const ordered_json& need(const ordered_json& obj, const std::string& ctx,
                         const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) cfg_fail(ctx + " is missing \"" + std::string(key) + "\"");
  return *it;
}

double as_number(const ordered_json& v, const std::string& ctx) {
  if (!v.is_number()) cfg_fail(ctx + " must be a number");
  return v.get<double>();
}

double need_number(const ordered_json& obj, const std::string& ctx,
                   const char* key) {
  return as_number(need(obj, ctx, key), ctx + "." + key);
}

double opt_number(const ordered_json& obj, const std::string& ctx,
                  const char* key, double fallback) {
  auto it = obj.find(key);
  return it == obj.end() ? fallback : as_number(*it, ctx + "." + key);
}

int opt_int(const ordered_json& obj, const std::string& ctx, const char* key,
            int fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) cfg_fail(ctx + "." + key + " must be an integer");
  return it->get<int>();
}

std::string need_string(const ordered_json& obj, const std::string& ctx,
                        const char* key) {
  const ordered_json& v = need(obj, ctx, key);
  if (!v.is_string()) cfg_fail(ctx + "." + key + " must be a string");
  return v.get<std::string>();
}

PeriodicCoefficient parse_coefficient(const ordered_json& j,
                                      const std::string& ctx) {
  if (!j.is_object()) cfg_fail(ctx + " must be an object");
  const std::string kind = need_string(j, ctx, "kind");
  if (kind == "constant") {
    check_keys(j, ctx, {"kind", "value"});
    return PeriodicCoefficient::constant(need_number(j, ctx, "value"));
  }
  if (kind == "sinusoid") {
    check_keys(j, ctx, {"kind", "offset", "amplitude", "omega", "phase"});
    return PeriodicCoefficient::sinusoid(
        need_number(j, ctx, "offset"), need_number(j, ctx, "amplitude"),
        opt_number(j, ctx, "omega", 1.0), opt_number(j, ctx, "phase", 0.0));
  }
  if (kind == "fourier") {
    check_keys(j, ctx, {"kind", "offset", "harmonics", "period"});
    FourierSpec f;
    f.offset = need_number(j, ctx, "offset");
    f.period = opt_number(j, ctx, "period", 0.0);
    const ordered_json& hs = need(j, ctx, "harmonics");
    if (!hs.is_array()) cfg_fail(ctx + ".harmonics must be an array");
    for (std::size_t k = 0; k < hs.size(); ++k) {
      const ordered_json& pair = hs[k];
      if (!pair.is_array() || pair.size() != 2) {
        cfg_fail(ctx + ".harmonics[" + std::to_string(k) +
                 "] must be a [cos, sin] pair");
      }
      f.harmonics.emplace_back(as_number(pair[0], ctx + ".harmonics"),
                               as_number(pair[1], ctx + ".harmonics"));
    }
    return PeriodicCoefficient(std::move(f));
  }
  if (kind == "table") {
    check_keys(j, ctx, {"kind", "samples", "period"});
    TableSpec t;
    t.period = opt_number(j, ctx, "period", 0.0);
    const ordered_json& ss = need(j, ctx, "samples");
    if (!ss.is_array()) cfg_fail(ctx + ".samples must be an array");
    for (const auto& v : ss) t.samples.push_back(as_number(v, ctx + ".samples"));
    return PeriodicCoefficient(std::move(t));
  }
  cfg_fail(ctx + ": unknown kind \"" + kind + "\"");
}

ordered_json coefficient_to_json(const PeriodicCoefficient& c) {
  ordered_json j;
  if (const auto* k = c.get_if<ConstantSpec>()) {
    j["kind"] = "constant";
    j["value"] = k->value;
  } else if (const auto* s = c.get_if<SinusoidSpec>()) {
    j["kind"] = "sinusoid";
    j["offset"] = s->offset;
    j["amplitude"] = s->amplitude;
    j["omega"] = s->omega;
    j["phase"] = s->phase;
  } else if (const auto* f = c.get_if<FourierSpec>()) {
    j["kind"] = "fourier";
    j["offset"] = f->offset;
    ordered_json hs = ordered_json::array();
    for (const auto& [a, b] : f->harmonics) hs.push_back({a, b});
    j["harmonics"] = std::move(hs);
    if (f->period > 0.0) j["period"] = f->period;
  } else if (const auto* t = c.get_if<TableSpec>()) {
    j["kind"] = "table";
    j["samples"] = t->samples;
    if (t->period > 0.0) j["period"] = t->period;
  }
  return j;
}

void parse_numerics(const ordered_json& j, NumericsConfig& n) {
  const std::string ctx = "numerics";
  check_keys(j, ctx,
             {"grid_n", "quad_n", "face_grid", "lambda_grid", "boundary_grid",
              "extrema_margin", "inversion_tol", "cap_safety",
              "homotopy_floor", "marginal_threshold", "abs_tol", "rel_tol",
              "newton_tol", "newton_max_iter", "fallback_periods",
              "verify_samples"});
  n.grid_n = opt_int(j, ctx, "grid_n", n.grid_n);
  n.quad_n = opt_int(j, ctx, "quad_n", n.quad_n);
  n.face_grid = opt_int(j, ctx, "face_grid", n.face_grid);
  n.lambda_grid = opt_int(j, ctx, "lambda_grid", n.lambda_grid);
  n.boundary_grid = opt_int(j, ctx, "boundary_grid", n.boundary_grid);
  n.extrema_margin = opt_number(j, ctx, "extrema_margin", n.extrema_margin);
  n.inversion_tol = opt_number(j, ctx, "inversion_tol", n.inversion_tol);
  n.cap_safety = opt_number(j, ctx, "cap_safety", n.cap_safety);
  n.homotopy_floor = opt_number(j, ctx, "homotopy_floor", n.homotopy_floor);
  n.marginal_threshold =
      opt_number(j, ctx, "marginal_threshold", n.marginal_threshold);
  n.abs_tol = opt_number(j, ctx, "abs_tol", n.abs_tol);
  n.rel_tol = opt_number(j, ctx, "rel_tol", n.rel_tol);
  n.newton_tol = opt_number(j, ctx, "newton_tol", n.newton_tol);
  n.newton_max_iter = opt_int(j, ctx, "newton_max_iter", n.newton_max_iter);
  n.fallback_periods = opt_int(j, ctx, "fallback_periods", n.fallback_periods);
  n.verify_samples = opt_int(j, ctx, "verify_samples", n.verify_samples);
}

void parse_run(const ordered_json& j, RunConfig& r) {
  const std::string ctx = "run";
  check_keys(j, ctx, {"t_end", "out_points", "seed", "x0", "sweep"});
  r.t_end = opt_number(j, ctx, "t_end", r.t_end);
  r.out_points = opt_int(j, ctx, "out_points", r.out_points);
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_integer()) cfg_fail("run.seed must be an integer");
    r.seed = it->get<unsigned long long>();
  }
  if (auto it = j.find("x0"); it != j.end()) {
    if (!it->is_array() || it->size() != 5) {
      cfg_fail("run.x0 must be an array of 5 numbers");
    }
    State5 x{};
    for (std::size_t i = 0; i < 5; ++i) x[i] = as_number((*it)[i], "run.x0");
    r.x0 = x;
  }
  if (auto it = j.find("sweep"); it != j.end()) {
    const std::string sctx = "run.sweep";
    if (!it->is_object()) cfg_fail(sctx + " must be an object");
    check_keys(*it, sctx, {"parameter", "from", "to", "count", "command"});
    SweepConfig s;
    s.parameter = need_string(*it, sctx, "parameter");
    s.from = need_number(*it, sctx, "from");
    s.to = need_number(*it, sctx, "to");
    const ordered_json& cnt = need(*it, sctx, "count");
    if (!cnt.is_number_integer()) cfg_fail(sctx + ".count must be an integer");
    s.count = cnt.get<int>();
    if (s.count < 1) cfg_fail(sctx + ".count must be at least 1");
    s.command = need_string(*it, sctx, "command");
    if (s.command != "check" && s.command != "bounds") {
      cfg_fail(sctx + ".command must be \"check\" or \"bounds\"");
    }
    r.sweep = std::move(s);
  }
}

}  // namespace

bounds::BoundsOptions NumericsConfig::bounds_options() const {
  bounds::BoundsOptions o;
  o.grid_n = grid_n;
  o.quad_n = quad_n;
  o.extrema_margin = extrema_margin;
  o.inversion_tol = inversion_tol;
  o.cap_safety = cap_safety;
  return o;
}

degree::CertOptions NumericsConfig::cert_options() const {
  degree::CertOptions o;
  o.quad_n = quad_n;
  o.face_grid = face_grid;
  o.lambda_grid = lambda_grid;
  o.boundary_grid = boundary_grid;
  o.marginal_threshold = marginal_threshold;
  o.homotopy_floor = homotopy_floor;
  return o;
}

solver::IntegratorOptions NumericsConfig::integrator_options() const {
  solver::IntegratorOptions o;
  o.abs_tol = abs_tol;
  o.rel_tol = rel_tol;
  return o;
}

solver::ShootingOptions NumericsConfig::shooting_options() const {
  solver::ShootingOptions o;
  o.integrator = integrator_options();
  o.newton_tol = newton_tol;
  o.newton_max_iter = newton_max_iter;
  o.fallback_periods = fallback_periods;
  o.verify_samples = verify_samples;
  return o;
}

solver::DdeOptions NumericsConfig::dde_options() const {
  solver::DdeOptions o;
  o.integrator = integrator_options();
  return o;
}

Config parse_config(const std::string& text, const std::string& origin) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    cfg_fail(origin + " line " + std::to_string(line_of_byte(text, e.byte)) +
             ": " + e.what());
  }
  if (!j.is_object()) cfg_fail(origin + ": top level must be an object");
  check_keys(j, "the top level", {"model", "numerics", "run"});

  Config cfg;
  const ordered_json& model = need(j, "config", "model");
  if (!model.is_object()) cfg_fail("model must be an object");
  check_keys(model, "model", {"T", "n", "tau", "coefficients", "history"});
  cfg.model.T = need_number(model, "model", "T");
  cfg.model.n = need_number(model, "model", "n");
  cfg.model.tau = opt_number(model, "model", "tau", 0.0);

  const ordered_json& coeffs = need(model, "model", "coefficients");
  if (!coeffs.is_object()) cfg_fail("model.coefficients must be an object");
  {
    std::initializer_list<const char*> names = {
        "V_S", "V_m", "V_1", "V_2", "V_3", "V_4", "V_d", "K_I", "K_1",
        "K_2", "K_3", "K_4", "K_d", "K_m1", "K_s", "k_1", "k_2"};
    check_keys(coeffs, "model.coefficients", names);
  }
  for (const auto& entry : coefficient_table()) {
    const std::string ctx = std::string("model.coefficients.") + entry.name;
    cfg.model.*entry.member = parse_coefficient(need(coeffs, "model.coefficients", entry.name), ctx);
  }

  if (auto it = model.find("history"); it != model.end()) {
    const ordered_json& h = *it;
    if (!h.is_object()) cfg_fail("model.history must be an object");
    check_keys(h, "model.history", {"M", "P0", "P1", "P2", "PN"});
    cfg.history.M = parse_coefficient(need(h, "model.history", "M"), "model.history.M");
    cfg.history.P0 = parse_coefficient(need(h, "model.history", "P0"), "model.history.P0");
    cfg.history.P1 = parse_coefficient(need(h, "model.history", "P1"), "model.history.P1");
    cfg.history.P2 = parse_coefficient(need(h, "model.history", "P2"), "model.history.P2");
    cfg.history.PN = parse_coefficient(need(h, "model.history", "PN"), "model.history.PN");
    cfg.has_history = true;
  }

  if (auto it = j.find("numerics"); it != j.end()) {
    if (!it->is_object()) cfg_fail("numerics must be an object");
    parse_numerics(*it, cfg.numerics);
  }
  if (auto it = j.find("run"); it != j.end()) {
    if (!it->is_object()) cfg_fail("run must be an object");
    parse_run(*it, cfg.run);
  }

  cfg.model.validate();
  if (cfg.has_history) cfg.history.validate(cfg.model.T);
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw PercycleError(ErrorCode::io_error,
                        "cannot open config file " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

Config builtin_config() {
  Config cfg;
  cfg.model = builtin_example();
  cfg.history = builtin_history();
  cfg.has_history = true;
  return cfg;
}

std::string dump_config(const Config& cfg) {
  ordered_json j;
  ordered_json model;
  model["T"] = cfg.model.T;
  model["n"] = cfg.model.n;
  model["tau"] = cfg.model.tau;
  ordered_json coeffs;
  for (const auto& entry : coefficient_table()) {
    coeffs[entry.name] = coefficient_to_json(cfg.model.*entry.member);
  }
  model["coefficients"] = std::move(coeffs);
  if (cfg.has_history) {
    ordered_json h;
    h["M"] = coefficient_to_json(cfg.history.M);
    h["P0"] = coefficient_to_json(cfg.history.P0);
    h["P1"] = coefficient_to_json(cfg.history.P1);
    h["P2"] = coefficient_to_json(cfg.history.P2);
    h["PN"] = coefficient_to_json(cfg.history.PN);
    model["history"] = std::move(h);
  }
  j["model"] = std::move(model);

  ordered_json num;
  const NumericsConfig& n = cfg.numerics;
  num["grid_n"] = n.grid_n;
  num["quad_n"] = n.quad_n;
  num["face_grid"] = n.face_grid;
  num["lambda_grid"] = n.lambda_grid;
  num["boundary_grid"] = n.boundary_grid;
  num["extrema_margin"] = n.extrema_margin;
  num["inversion_tol"] = n.inversion_tol;
  num["cap_safety"] = n.cap_safety;
  num["homotopy_floor"] = n.homotopy_floor;
  num["marginal_threshold"] = n.marginal_threshold;
  num["abs_tol"] = n.abs_tol;
  num["rel_tol"] = n.rel_tol;
  num["newton_tol"] = n.newton_tol;
  num["newton_max_iter"] = n.newton_max_iter;
  num["fallback_periods"] = n.fallback_periods;
  num["verify_samples"] = n.verify_samples;
  j["numerics"] = std::move(num);

  ordered_json run;
  run["t_end"] = cfg.run.t_end;
  run["out_points"] = cfg.run.out_points;
  run["seed"] = cfg.run.seed;
  if (cfg.run.x0) {
    run["x0"] = *cfg.run.x0;
  }
  if (cfg.run.sweep) {
    ordered_json s;
    s["parameter"] = cfg.run.sweep->parameter;
    s["from"] = cfg.run.sweep->from;
    s["to"] = cfg.run.sweep->to;
    s["count"] = cfg.run.sweep->count;
    s["command"] = cfg.run.sweep->command;
    run["sweep"] = std::move(s);
  }
  j["run"] = std::move(run);
  return j.dump(1) + "\n";
}

}  // namespace percycle
