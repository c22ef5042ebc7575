#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "percycle/errors.hpp"
#include "percycle/model.hpp"
#include "percycle/params.hpp"
#include "support/reference_values.hpp"
#include "support/test_helpers.hpp"

using percycle::ParamSet;
using percycle::PercycleError;
using percycle::State5;

TEST_CASE("builtin example history evaluates to the documented start state") {
  const auto h = percycle::builtin_history();
  const ParamSet p = percycle::builtin_example();
  const State5 x0 = h.eval(0.0, p.T);
  CHECK(x0[0] == refvals::cases_history_at_0_0);
  CHECK(x0[1] == refvals::cases_history_at_0_1);
  CHECK(x0[2] == refvals::cases_history_at_0_2);
  CHECK(x0[3] == refvals::cases_history_at_0_3);
  CHECK(x0[4] == refvals::cases_history_at_0_4);
}

TEST_CASE("right-hand side matches the frozen generic evaluation") {
  const ParamSet p = percycle::builtin_example();
  const State5 x{refvals::cases_rhs_generic_x_0, refvals::cases_rhs_generic_x_1,
                 refvals::cases_rhs_generic_x_2, refvals::cases_rhs_generic_x_3,
                 refvals::cases_rhs_generic_x_4};
  const State5 f = percycle::rhs(p, refvals::cases_rhs_generic_t, x);
  const double expect[5] = {refvals::cases_rhs_generic_0, refvals::cases_rhs_generic_1,
                            refvals::cases_rhs_generic_2, refvals::cases_rhs_generic_3,
                            refvals::cases_rhs_generic_4};
  for (int i = 0; i < 5; ++i) {
    INFO("component " << i);
    CHECK(testutil::rel_close(f[i], expect[i], 1e-12));
  }
}

TEST_CASE("repression term is bounded, decreasing, and saturates") {
  const double V = 1.26, K = 1.2, n = 4.0;
  CHECK(percycle::hill_repression(V, K, n, 0.0) == V);
  double prev = V;
  for (double pn : {0.1, 0.5, 1.0, 2.0, 5.0, 50.0}) {
    const double v = percycle::hill_repression(V, K, n, pn);
    CHECK(v < prev);
    CHECK(v > 0.0);
    prev = v;
  }
  CHECK(percycle::hill_repression(V, K, n, 1e6) < 1e-12);
  // Huge nuclear concentration must not overflow through the power term.
  CHECK(std::isfinite(percycle::hill_repression(V, K, n, 1e200)));
  CHECK(percycle::hill_repression(V, K, n, 1e200) >= 0.0);
}

TEST_CASE("saturating rate is increasing in substrate and bounded by V") {
  const double V = 7.2, K = 1.0;
  CHECK(percycle::mm(V, K, 0.0) == 0.0);
  double prev = 0.0;
  for (double s : {0.01, 0.1, 1.0, 10.0, 1000.0}) {
    const double v = percycle::mm(V, K, s);
    CHECK(v > prev);
    CHECK(v < V);
    prev = v;
  }
}

TEST_CASE("property: no flow out of the positive cone through a zero face") {
  const ParamSet p = percycle::builtin_example();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> xd(0.0, 3.0);
  std::uniform_real_distribution<double> td(0.0, 3.0 * p.T);
  std::uniform_int_distribution<int> coordd(0, 4);
  for (int i = 0; i < 1000; ++i) {
    State5 x{xd(rng), xd(rng), xd(rng), xd(rng), xd(rng)};
    const int j = coordd(rng);
    x[j] = 0.0;
    const State5 f = percycle::rhs(p, td(rng), x);
    INFO("case " << i << " coord " << j);
    REQUIRE(f[j] >= 0.0);
  }
}

TEST_CASE("property: total phosphorylated pool is blind to the exchange rates") {
  // The nuclear exchange terms cancel from the sum of the last two balance
  // equations, so replacing the exchange rates must leave that sum unchanged.
  const ParamSet p = percycle::builtin_example();
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> xd(0.0, 3.0);
  std::uniform_real_distribution<double> td(0.0, 3.0 * p.T);
  std::uniform_real_distribution<double> kd(0.1, 2.6);
  for (int i = 0; i < 1000; ++i) {
    const State5 x{xd(rng), xd(rng), xd(rng), xd(rng), xd(rng)};
    const double t = td(rng);
    percycle::CoeffValues c = percycle::eval_coeffs(p, t);
    c.k_1 = kd(rng);
    c.k_2 = kd(rng);
    const State5 fa = percycle::rhs_from_values(c, p.n, x, x[4]);
    c.k_1 = kd(rng);
    c.k_2 = kd(rng);
    const State5 fb = percycle::rhs_from_values(c, p.n, x, x[4]);
    const double sa = fa[3] + fa[4];
    const double sb = fb[3] + fb[4];
    INFO("case " << i << ": " << sa << " vs " << sb);
    REQUIRE(std::fabs(sa - sb) <= 1e-14);
  }
}

TEST_CASE("state clamping forgives roundoff but rejects real negativity") {
  State5 tiny{1.0, -1e-13, 0.5, 0.0, -0.9e-12};
  const State5 c = percycle::clamp_state(tiny);
  CHECK(c[1] == 0.0);
  CHECK(c[4] == 0.0);
  CHECK(c[0] == 1.0);

  State5 bad{1.0, -1e-6, 0.5, 0.0, 0.1};
  CHECK_THROWS_AS(percycle::clamp_state(bad), PercycleError);
}

TEST_CASE("delayed variant reads the repressor from the supplied past value") {
  const ParamSet p = percycle::builtin_example();
  const State5 x{1.0, 0.5, 0.25, 0.125, 0.0625};
  const double t = 0.7;
  // With the delayed value equal to the instantaneous one, both agree.
  const State5 a = percycle::rhs(p, t, x);
  const State5 b = percycle::rhs_delayed(p, t, x, x[4]);
  for (int i = 0; i < 5; ++i) CHECK(a[i] == b[i]);
  // Only the transcription component depends on the delayed argument.
  const State5 d = percycle::rhs_delayed(p, t, x, 2.5);
  CHECK(d[0] != a[0]);
  for (int i = 1; i < 5; ++i) CHECK(d[i] == a[i]);
}

TEST_CASE("parameter validation flags nonsense inputs") {
  ParamSet p = percycle::builtin_example();
  SECTION("valid set passes") { CHECK_NOTHROW(p.validate()); }
  SECTION("nonpositive period") {
    p.T = 0.0;
    CHECK_THROWS_AS(p.validate(), PercycleError);
  }
  SECTION("negative delay") {
    p.tau = -0.1;
    CHECK_THROWS_AS(p.validate(), PercycleError);
  }
  SECTION("coefficient crossing zero") {
    p.V_2 = percycle::PeriodicCoefficient::sinusoid(0.5, 1.0);
    CHECK_THROWS_AS(p.validate(), PercycleError);
  }
}
