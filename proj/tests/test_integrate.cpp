#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "percycle/errors.hpp"
#include "percycle/integrate.hpp"
#include "percycle/model.hpp"
#include "percycle/params.hpp"
#include "support/test_helpers.hpp"

using namespace percycle;
using solver::DenseOutput;
using solver::IntegratorOptions;
using testutil::rel_close;

namespace {

// Scalar test problems embedded in the first component.
solver::FieldFn decay() {
  return [](double, const State5& y) {
    return State5{-y[0], 0.0, 0.0, 0.0, 0.0};
  };
}

// Harmonic oscillator in components 0/1: y0' = y1, y1' = -y0.
solver::FieldFn oscillator() {
  return [](double, const State5& y) {
    return State5{y[1], -y[0], 0.0, 0.0, 0.0};
  };
}

}  // namespace

TEST_CASE("adaptive integrator reproduces exponential decay") {
  const State5 y0{1.0, 0.0, 0.0, 0.0, 0.0};
  IntegratorOptions opt;
  opt.abs_tol = 1e-12;
  opt.rel_tol = 1e-11;
  const State5 y1 = solver::integrate(decay(), 0.0, 1.0, y0, opt);
  CHECK(std::fabs(y1[0] - std::exp(-1.0)) <= 1e-10);
}

TEST_CASE("adaptive integrator tracks the oscillator over many cycles") {
  const State5 y0{1.0, 0.0, 0.0, 0.0, 0.0};
  const double t1 = 6.283185307179586 * 5.0;
  IntegratorOptions opt;
  opt.abs_tol = 1e-12;
  opt.rel_tol = 1e-11;
  const State5 y1 = solver::integrate(oscillator(), 0.0, t1, y0, opt);
  CHECK(std::fabs(y1[0] - 1.0) <= 1e-8);
  CHECK(std::fabs(y1[1]) <= 1e-8);
}

TEST_CASE("tighter tolerances give a smaller error") {
  const State5 y0{1.0, 0.0, 0.0, 0.0, 0.0};
  IntegratorOptions loose;
  loose.abs_tol = 1e-6;
  loose.rel_tol = 1e-5;
  IntegratorOptions tight;
  tight.abs_tol = 1e-12;
  tight.rel_tol = 1e-11;
  const double e_loose =
      std::fabs(solver::integrate(decay(), 0.0, 1.0, y0, loose)[0] - std::exp(-1.0));
  const double e_tight =
      std::fabs(solver::integrate(decay(), 0.0, 1.0, y0, tight)[0] - std::exp(-1.0));
  CHECK(e_tight < e_loose);
}

TEST_CASE("dense output interpolates between accepted steps") {
  const State5 y0{1.0, 0.0, 0.0, 0.0, 0.0};
  DenseOutput dense;
  solver::IntegrationStats stats;
  solver::integrate(decay(), 0.0, 2.0, y0, {}, &dense, &stats);
  REQUIRE_FALSE(dense.empty());
  CHECK(dense.t_begin() == 0.0);
  CHECK(dense.t_end() == 2.0);
  CHECK(stats.n_accepted > 0);
  CHECK(stats.n_rhs > 0);
  for (int k = 0; k <= 40; ++k) {
    const double t = 2.0 * k / 40.0;
    const double v = dense.eval(t)[0];
    INFO("t = " << t);
    REQUIRE(std::fabs(v - std::exp(-t)) <= 1e-7);
  }
}

TEST_CASE("interpolation hits the stored endpoints exactly") {
  const State5 y0{1.0, 0.0, 0.0, 0.0, 0.0};
  DenseOutput dense;
  solver::integrate(decay(), 0.0, 1.0, y0, {}, &dense);
  const auto& s = dense.steps().front();
  const State5 a = solver::hermite_eval(s, s.t0);
  const State5 b = solver::hermite_eval(s, s.t1);
  for (int i = 0; i < 5; ++i) {
    CHECK(a[i] == s.y0[i]);
    CHECK(std::fabs(b[i] - s.y1[i]) <= 1e-15);
  }
}

TEST_CASE("zero-length spans return the initial state") {
  const State5 y0{1.0, 2.0, 3.0, 4.0, 5.0};
  const State5 y1 = solver::integrate(decay(), 1.5, 1.5, y0, {});
  for (int i = 0; i < 5; ++i) CHECK(y1[i] == y0[i]);
}

TEST_CASE("exhausting the step budget is a typed failure") {
  IntegratorOptions opt;
  opt.max_steps = 3;
  const State5 y0{1.0, 0.0, 0.0, 0.0, 0.0};
  try {
    solver::integrate(oscillator(), 0.0, 1000.0, y0, opt);
    FAIL("expected a throw");
  } catch (const PercycleError& e) {
    CHECK(e.code() == ErrorCode::step_failure);
  }
}

TEST_CASE("fixed-step classic scheme converges at fourth order") {
  const State5 y0{1.0, 0.0, 0.0, 0.0, 0.0};
  const double exact = std::exp(-1.0);
  const double e1 = std::fabs(solver::integrate_rk4(decay(), 0.0, 1.0, y0, 16)[0] - exact);
  const double e2 = std::fabs(solver::integrate_rk4(decay(), 0.0, 1.0, y0, 32)[0] - exact);
  const double ratio = e1 / e2;
  INFO("ratio " << ratio);
  CHECK(ratio > 14.0);
  CHECK(ratio < 18.0);
}

TEST_CASE("model field stays positive from the documented start state") {
  const ParamSet p = builtin_example();
  const State5 x0 = builtin_history().eval(0.0, p.T);
  DenseOutput dense;
  const State5 xT = solver::integrate(solver::model_field(p), 0.0, p.T, x0, {}, &dense);
  for (int i = 0; i < 5; ++i) {
    CHECK(std::isfinite(xT[i]));
    CHECK(xT[i] > 0.0);
  }
  for (int k = 0; k <= 64; ++k) {
    const State5 x = dense.eval(p.T * k / 64.0);
    for (int i = 0; i < 5; ++i) REQUIRE(x[i] >= 0.0);
  }
}

TEST_CASE("backward spans are rejected") {
  const State5 y0{1.0, 0.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(solver::integrate(decay(), 1.0, 0.0, y0, {}), PercycleError);
}
