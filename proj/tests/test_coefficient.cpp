#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "percycle/coefficient.hpp"
#include "percycle/errors.hpp"
#include "support/test_helpers.hpp"

using percycle::CoefficientKind;
using percycle::ErrorCode;
using percycle::FourierSpec;
using percycle::PercycleError;
using percycle::PeriodicCoefficient;
using percycle::SinusoidSpec;
using percycle::TableSpec;

namespace {
constexpr double kTwoPi = 6.283185307179586;
}

TEST_CASE("constant coefficient evaluates and bounds trivially") {
  auto c = PeriodicCoefficient::constant(3.25);
  CHECK(c.kind() == CoefficientKind::constant);
  CHECK(c.eval(0.0, kTwoPi) == 3.25);
  CHECK(c.eval(123.456, kTwoPi) == 3.25);
  auto ex = c.extrema(kTwoPi, 64);
  CHECK(ex.lo == 3.25);
  CHECK(ex.hi == 3.25);
}

TEST_CASE("sinusoid evaluates offset plus sine and has closed-form extrema") {
  auto c = PeriodicCoefficient::sinusoid(1.26, 0.2);
  CHECK(c.kind() == CoefficientKind::sinusoid);
  CHECK(c.eval(0.0, kTwoPi) == 1.26);
  CHECK(testutil::rel_close(c.eval(kTwoPi / 4.0, kTwoPi), 1.46, 1e-15));
  auto ex = c.extrema(kTwoPi, 64);
  CHECK(ex.lo == 1.26 - 0.2);
  CHECK(ex.hi == 1.26 + 0.2);

  // Negative amplitude flips the phase but not the range.
  auto d = PeriodicCoefficient::sinusoid(1.9, -0.3);
  auto exd = d.extrema(kTwoPi, 64);
  CHECK(exd.lo == 1.9 - 0.3);
  CHECK(exd.hi == 1.9 + 0.3);
  CHECK(testutil::rel_close(d.eval(0.7, kTwoPi), 1.9 - 0.3 * std::sin(0.7), 1e-15));
}

TEST_CASE("sinusoid phase shifts the waveform") {
  const double half_pi = 1.5707963267948966;
  auto cosine = PeriodicCoefficient::sinusoid(3.0, 1.0, 1.0, half_pi);
  CHECK(testutil::rel_close(cosine.eval(0.9, kTwoPi), 3.0 + std::cos(0.9), 1e-15));
  auto minus_cos = PeriodicCoefficient::sinusoid(1.2, 1.0, 1.0, -half_pi);
  CHECK(testutil::rel_close(minus_cos.eval(0.9, kTwoPi), 1.2 - std::cos(0.9), 1e-15));
}

TEST_CASE("fourier coefficient sums harmonics over its own period") {
  FourierSpec spec;
  spec.offset = 2.0;
  spec.harmonics = {{0.3, 0.1}, {0.0, 0.05}};
  spec.period = kTwoPi;
  PeriodicCoefficient c{spec};
  CHECK(c.kind() == CoefficientKind::fourier);
  const double t = 1.234;
  const double expect = 2.0 + 0.3 * std::cos(t) + 0.1 * std::sin(t) +
                        0.05 * std::sin(2.0 * t);
  CHECK(testutil::rel_close(c.eval(t, kTwoPi), expect, 1e-14));

  auto ex = c.extrema(kTwoPi, 4096);
  // Enclosure must contain sampled values.
  for (int i = 0; i < 50; ++i) {
    const double ti = kTwoPi * i / 50.0;
    const double v = c.eval(ti, kTwoPi);
    CHECK(ex.lo <= v);
    CHECK(v <= ex.hi);
  }
}

TEST_CASE("table coefficient interpolates linearly with wraparound") {
  TableSpec spec;
  spec.samples = {1.0, 2.0, 3.0, 2.0};
  spec.period = 4.0;
  PeriodicCoefficient c{spec};
  CHECK(c.eval(0.0, 4.0) == 1.0);
  CHECK(c.eval(0.5, 4.0) == 1.5);
  CHECK(c.eval(1.0, 4.0) == 2.0);
  // Last segment wraps back to the first sample.
  CHECK(c.eval(3.5, 4.0) == 1.5);
  // Periodic continuation.
  CHECK(c.eval(4.5, 4.0) == 1.5);
  auto ex = c.extrema(4.0, 256);
  CHECK(ex.lo <= 1.0);
  CHECK(ex.hi >= 3.0);
  CHECK(ex.lo > 0.0);  // positivity floor on the padding
}

TEST_CASE("property: evaluation is periodic in the model period") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> offd(0.5, 4.0);
  std::uniform_real_distribution<double> ampd(-0.4, 0.4);
  std::uniform_real_distribution<double> td(-50.0, 50.0);
  std::uniform_int_distribution<int> kindd(0, 3);
  std::uniform_int_distribution<int> harm(1, 3);

  for (int i = 0; i < 1000; ++i) {
    PeriodicCoefficient c = PeriodicCoefficient::constant(offd(rng));
    switch (kindd(rng)) {
      case 0:
        break;
      case 1:
        c = PeriodicCoefficient::sinusoid(offd(rng), ampd(rng),
                                          static_cast<double>(harm(rng)));
        break;
      case 2: {
        FourierSpec f;
        f.offset = offd(rng);
        f.harmonics = {{ampd(rng), ampd(rng)}, {ampd(rng) / 2, ampd(rng) / 2}};
        f.period = kTwoPi;
        c = PeriodicCoefficient{f};
        break;
      }
      default: {
        TableSpec tb;
        for (int k = 0; k < 8; ++k) tb.samples.push_back(offd(rng));
        tb.period = kTwoPi;
        c = PeriodicCoefficient{tb};
        break;
      }
    }
    const double t = td(rng);
    const double a = c.eval(t, kTwoPi);
    const double b = c.eval(t + kTwoPi, kTwoPi);
    REQUIRE(testutil::rel_close(a, b, 1e-12, 1e-12));
  }
}

TEST_CASE("validate rejects broken coefficients") {
  SECTION("nonpositive constant") {
    auto c = PeriodicCoefficient::constant(0.0);
    CHECK_THROWS_AS(c.validate("V_m", kTwoPi, true), PercycleError);
  }
  SECTION("sinusoid dipping below zero") {
    auto c = PeriodicCoefficient::sinusoid(0.5, 0.8);
    CHECK_THROWS_AS(c.validate("K_I", kTwoPi, true), PercycleError);
  }
  SECTION("sinusoid whose cycle does not fit the period") {
    auto c = PeriodicCoefficient::sinusoid(2.0, 0.5, 1.5);
    CHECK_THROWS_AS(c.validate("V_S", kTwoPi, true), PercycleError);
  }
  SECTION("nonfinite value") {
    auto c = PeriodicCoefficient::constant(
        std::numeric_limits<double>::quiet_NaN());
    CHECK_THROWS_AS(c.validate("V_d", kTwoPi, true), PercycleError);
  }
  SECTION("history may touch zero but not go negative") {
    auto zeroish = PeriodicCoefficient::constant(0.0);
    CHECK_NOTHROW(zeroish.validate("P2", kTwoPi, false));
    auto neg = PeriodicCoefficient::constant(-0.1);
    CHECK_THROWS_AS(neg.validate("P2", kTwoPi, false), PercycleError);
  }
  SECTION("error carries the coefficient name and a typed code") {
    auto c = PeriodicCoefficient::constant(-1.0);
    try {
      c.validate("V_3", kTwoPi, true);
      FAIL("expected a throw");
    } catch (const PercycleError& e) {
      CHECK(e.code() == ErrorCode::invalid_coefficient);
      CHECK(std::string(e.what()).find("V_3") != std::string::npos);
    }
  }
}

TEST_CASE("equality compares the stored description") {
  auto a = PeriodicCoefficient::sinusoid(1.26, 0.2);
  auto b = PeriodicCoefficient::sinusoid(1.26, 0.2);
  auto c = PeriodicCoefficient::sinusoid(1.26, 0.21);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK_FALSE(a == PeriodicCoefficient::constant(1.26));
}
