#include "percycle/coefficient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "percycle/errors.hpp"

namespace percycle {

namespace {

double reduce_periodic(double t, double period) {
  double u = std::fmod(t, period);
  if (u < 0.0) u += period;
  return u;
}

[[noreturn]] void bad_coefficient(const std::string& name,
                                  const std::string& what) {
  throw PercycleError(ErrorCode::invalid_coefficient,
                      "coefficient " + name + ": " + what);
}

bool divides_period(double sub, double period) {
  // sub must fit an integer number of times into period.
  if (!(sub > 0.0) || !(period > 0.0)) return false;
  double ratio = period / sub;
  double nearest = std::round(ratio);
  return nearest >= 1.0 && std::abs(ratio - nearest) <= 1e-9 * ratio;
}

}  // namespace

CoefficientKind PeriodicCoefficient::kind() const {
  switch (storage_.index()) {
    case 0: return CoefficientKind::constant;
    case 1: return CoefficientKind::sinusoid;
    case 2: return CoefficientKind::fourier;
    default: return CoefficientKind::table;
  }
}

double PeriodicCoefficient::eval(double t, double period) const {
  if (const auto* c = std::get_if<ConstantSpec>(&storage_)) {
    return c->value;
  }
  if (const auto* s = std::get_if<SinusoidSpec>(&storage_)) {
    double u = reduce_periodic(t, period);
    return s->offset + s->amplitude * std::sin(s->omega * u + s->phase);
  }
  if (const auto* f = std::get_if<FourierSpec>(&storage_)) {
    double own = f->period > 0.0 ? f->period : period;
    double u = reduce_periodic(t, own);
    double w0 = 2.0 * M_PI / own;
    double acc = f->offset;
    for (std::size_t k = 0; k < f->harmonics.size(); ++k) {
      double arg = static_cast<double>(k + 1) * w0 * u;
      acc += f->harmonics[k].first * std::cos(arg) +
             f->harmonics[k].second * std::sin(arg);
    }
    return acc;
  }
  const auto& tab = std::get<TableSpec>(storage_);
  if (tab.samples.size() < 2) {
    throw PercycleError(ErrorCode::invalid_coefficient,
                        "table coefficient needs at least 2 samples");
  }
  double own = tab.period > 0.0 ? tab.period : period;
  double u = reduce_periodic(t, own);
  const std::size_t n = tab.samples.size();
  double pos = u / own * static_cast<double>(n);
  auto i = static_cast<std::size_t>(pos);
  if (i >= n) i = n - 1;  // u == own after roundoff
  double frac = pos - static_cast<double>(i);
  double a = tab.samples[i];
  double b = tab.samples[(i + 1) % n];
  return a + frac * (b - a);
}

Extrema PeriodicCoefficient::extrema(double period, int grid_n,
                                     double margin) const {
  if (const auto* c = std::get_if<ConstantSpec>(&storage_)) {
    return {c->value, c->value};
  }
  if (const auto* s = std::get_if<SinusoidSpec>(&storage_)) {
    double a = std::abs(s->amplitude);
    return {s->offset - a, s->offset + a};
  }
  // Sampled kinds: scan, then widen by a fraction of the observed range.
  if (grid_n < 8) grid_n = 8;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double dt = period / grid_n;
  for (int i = 0; i < grid_n; ++i) {
    double v = eval(i * dt, period);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  double pad = margin * (hi - lo);
  double lo_w = lo - pad;
  if (lo_w <= 0.0 && lo > 0.0) lo_w = 0.5 * lo;
  return {lo_w, hi + pad};
}

void PeriodicCoefficient::validate(const char* name, double period,
                                   bool require_positive) const {
  const std::string nm = name;
  auto finite = [&](double v, const char* field) {
    if (!std::isfinite(v)) bad_coefficient(nm, std::string(field) + " must be finite");
  };
  if (const auto* c = std::get_if<ConstantSpec>(&storage_)) {
    finite(c->value, "value");
    if (require_positive ? !(c->value > 0.0) : !(c->value >= 0.0)) {
      bad_coefficient(nm, require_positive ? "value must be positive"
                                           : "value must be nonnegative");
    }
    return;
  }
  if (const auto* s = std::get_if<SinusoidSpec>(&storage_)) {
    finite(s->offset, "offset");
    finite(s->amplitude, "amplitude");
    finite(s->omega, "omega");
    finite(s->phase, "phase");
    if (!(s->omega > 0.0)) bad_coefficient(nm, "omega must be positive");
    // The sinusoid must close after an integer number of cycles per period.
    double cycle = 2.0 * M_PI / s->omega;
    if (!divides_period(cycle, period)) {
      bad_coefficient(nm, "omega does not complete whole cycles per period");
    }
    double lo = s->offset - std::abs(s->amplitude);
    if (require_positive ? !(lo > 0.0) : !(lo >= 0.0)) {
      bad_coefficient(nm, require_positive ? "range must stay positive"
                                           : "range must stay nonnegative");
    }
    return;
  }
  if (const auto* f = std::get_if<FourierSpec>(&storage_)) {
    finite(f->offset, "offset");
    if (f->harmonics.empty()) bad_coefficient(nm, "needs at least one harmonic");
    for (const auto& [a, b] : f->harmonics) {
      finite(a, "harmonic");
      finite(b, "harmonic");
    }
    double own = f->period > 0.0 ? f->period : period;
    if (!divides_period(own, period)) {
      bad_coefficient(nm, "period does not divide the model period");
    }
  } else {
    const auto& tab = std::get<TableSpec>(storage_);
    if (tab.samples.size() < 2) bad_coefficient(nm, "needs at least 2 samples");
    for (double v : tab.samples) finite(v, "sample");
    double own = tab.period > 0.0 ? tab.period : period;
    if (!divides_period(own, period)) {
      bad_coefficient(nm, "period does not divide the model period");
    }
  }
  // Sampled positivity for the non-closed-form kinds.
  Extrema ex = extrema(period, 4096, 0.0);
  if (require_positive ? !(ex.lo > 0.0) : !(ex.lo >= 0.0)) {
    bad_coefficient(nm, require_positive ? "sampled range must stay positive"
                                         : "sampled range must stay nonnegative");
  }
}

bool PeriodicCoefficient::operator==(const PeriodicCoefficient& other) const {
  if (storage_.index() != other.storage_.index()) return false;
  if (const auto* a = std::get_if<ConstantSpec>(&storage_)) {
    const auto* b = std::get_if<ConstantSpec>(&other.storage_);
    return a->value == b->value;
  }
  if (const auto* a = std::get_if<SinusoidSpec>(&storage_)) {
    const auto* b = std::get_if<SinusoidSpec>(&other.storage_);
    return a->offset == b->offset && a->amplitude == b->amplitude &&
           a->omega == b->omega && a->phase == b->phase;
  }
  if (const auto* a = std::get_if<FourierSpec>(&storage_)) {
    const auto* b = std::get_if<FourierSpec>(&other.storage_);
    return a->offset == b->offset && a->period == b->period &&
           a->harmonics == b->harmonics;
  }
  const auto& a = std::get<TableSpec>(storage_);
  const auto& b = std::get<TableSpec>(other.storage_);
  return a.period == b.period && a.samples == b.samples;
}

}  // namespace percycle
