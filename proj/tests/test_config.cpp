#include <catch2/catch_amalgamated.hpp>
#include <string>

#include "percycle/config.hpp"
#include "percycle/errors.hpp"
#include "support/test_helpers.hpp"

using namespace percycle;

namespace {
bool same_model(const ParamSet& a, const ParamSet& b) {
  if (a.T != b.T || a.n != b.n || a.tau != b.tau) return false;
  for (const auto& e : coefficient_table()) {
    if (!(a.*(e.member) == b.*(e.member))) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("builtin configuration validates and round-trips through text") {
  const Config cfg = builtin_config();
  CHECK_NOTHROW(cfg.model.validate());
  REQUIRE(cfg.has_history);

  const std::string text = dump_config(cfg);
  const Config back = parse_config(text, "<roundtrip>");
  CHECK(same_model(cfg.model, back.model));
  REQUIRE(back.has_history);
  CHECK(cfg.history.M == back.history.M);
  CHECK(cfg.history.P0 == back.history.P0);
  CHECK(cfg.history.P1 == back.history.P1);
  CHECK(cfg.history.P2 == back.history.P2);
  CHECK(cfg.history.PN == back.history.PN);
  CHECK(cfg.numerics.grid_n == back.numerics.grid_n);
  CHECK(cfg.numerics.inversion_tol == back.numerics.inversion_tol);
  CHECK(cfg.run.t_end == back.run.t_end);
  CHECK(cfg.run.out_points == back.run.out_points);
}

TEST_CASE("shipped example configuration equals the builtin one") {
  const Config cfg =
      load_config(std::string(PERCYCLE_CONFIG_DIR) + "/goldbeter_periodic.json");
  const Config ref = builtin_config();
  CHECK(same_model(cfg.model, ref.model));
  REQUIRE(cfg.has_history);
  CHECK(cfg.history.M == ref.history.M);
  CHECK(cfg.history.PN == ref.history.PN);
}

TEST_CASE("unknown keys are rejected by name") {
  std::string text = dump_config(builtin_config());
  text.replace(text.find("\"grid_n\""), 8, "\"grid_m\"");
  try {
    parse_config(text, "<test>");
    FAIL("expected a throw");
  } catch (const PercycleError& e) {
    CHECK(e.code() == ErrorCode::config_error);
    CHECK(std::string(e.what()).find("grid_m") != std::string::npos);
  }
}

TEST_CASE("a missing coefficient is reported") {
  const std::string text = R"({
    "model": {
      "T": 6.283185307179586,
      "n": 4.0,
      "coefficients": {
        "V_S": {"kind": "constant", "value": 1.26}
      }
    }
  })";
  try {
    parse_config(text, "<test>");
    FAIL("expected a throw");
  } catch (const PercycleError& e) {
    CHECK(e.code() == ErrorCode::config_error);
  }
}

TEST_CASE("malformed JSON reports the line of the defect") {
  const std::string text = "{\n \"model\": {\n  \"T\": oops\n }\n}\n";
  try {
    parse_config(text, "broken.json");
    FAIL("expected a throw");
  } catch (const PercycleError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("broken.json") != std::string::npos);
    CHECK(msg.find("line 3") != std::string::npos);
  }
}

TEST_CASE("type errors surface as configuration errors") {
  std::string text = dump_config(builtin_config());
  text.replace(text.find("\"grid_n\": 2048"), 14, "\"grid_n\": \"big\"");
  CHECK_THROWS_AS(parse_config(text, "<test>"), PercycleError);
}

TEST_CASE("sweep block parses and validates") {
  std::string text = dump_config(builtin_config());
  const std::string ins =
      "\"run\": {\n  \"sweep\": {\"parameter\": \"V_d\", \"from\": 7.0, "
      "\"to\": 7.4, \"count\": 3, \"command\": \"bounds\"},";
  text.replace(text.find("\"run\": {"), 8, ins);
  const Config cfg = parse_config(text, "<test>");
  REQUIRE(cfg.run.sweep.has_value());
  CHECK(cfg.run.sweep->parameter == "V_d");
  CHECK(cfg.run.sweep->count == 3);
  CHECK(cfg.run.sweep->command == "bounds");

  SECTION("bad inner command is rejected") {
    std::string bad = text;
    const auto pos = bad.find("\"command\": \"bounds\"");
    bad.replace(pos, 19, "\"command\": \"solve\"");
    CHECK_THROWS_AS(parse_config(bad, "<test>"), PercycleError);
  }
}

TEST_CASE("start-state override parses as a five-vector") {
  std::string text = dump_config(builtin_config());
  const std::string ins = "\"run\": {\n  \"x0\": [2.0, 0.2, 0.05, 0.03, 0.05],";
  text.replace(text.find("\"run\": {"), 8, ins);
  const Config cfg = parse_config(text, "<test>");
  REQUIRE(cfg.run.x0.has_value());
  CHECK((*cfg.run.x0)[0] == 2.0);
  CHECK((*cfg.run.x0)[4] == 0.05);

  SECTION("wrong arity is rejected") {
    std::string bad = dump_config(builtin_config());
    const std::string short_ins = "\"run\": {\n  \"x0\": [2.0, 0.2],";
    bad.replace(bad.find("\"run\": {"), 8, short_ins);
    CHECK_THROWS_AS(parse_config(bad, "<test>"), PercycleError);
  }
}

TEST_CASE("missing files are io errors, not parse errors") {
  try {
    load_config("/nonexistent/percycle.json");
    FAIL("expected a throw");
  } catch (const PercycleError& e) {
    CHECK(e.code() == ErrorCode::io_error);
  }
}

TEST_CASE("negative delay in the model block is rejected") {
  std::string text = dump_config(builtin_config());
  text.replace(text.find("\"tau\": 0.1"), 10, "\"tau\": -0.5");
  CHECK_THROWS_AS(parse_config(text, "<test>"), PercycleError);
}
