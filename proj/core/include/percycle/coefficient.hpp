#pragma once

#include <utility>
#include <variant>
#include <vector>

namespace percycle {

// One scalar model coefficient: a strictly positive periodic function of
// time. Four representations are supported; anything else must be sampled
// into a table. Evaluation reduces the argument modulo the period first so
// that c(t + T) reproduces c(t) to within rounding of t + T itself.

struct ConstantSpec {
  double value = 0.0;
};

// offset + amplitude * sin(omega * t + phase). A cosine is expressed via
// phase = +/- pi/2. The fundamental period 2*pi/omega must divide the
// model period T; that check lives in ParamSet::validate.
struct SinusoidSpec {
  double offset = 0.0;
  double amplitude = 0.0;
  double omega = 1.0;
  double phase = 0.0;
};

// offset + sum_k (a_k cos(k w0 t) + b_k sin(k w0 t)), w0 = 2*pi/period.
// harmonics[k-1] = {a_k, b_k}.
struct FourierSpec {
  double offset = 0.0;
  std::vector<std::pair<double, double>> harmonics;
  double period = 0.0;
};

// Uniform samples over [0, period): samples[i] = c(i * period / N).
// Evaluation is linear interpolation with periodic wraparound between the
// last sample and the first.
struct TableSpec {
  std::vector<double> samples;
  double period = 0.0;
};

enum class CoefficientKind { constant, sinusoid, fourier, table };

struct Extrema {
  double lo = 0.0;
  double hi = 0.0;
};

class PeriodicCoefficient {
 public:
  PeriodicCoefficient() : storage_(ConstantSpec{1.0}) {}
  explicit PeriodicCoefficient(ConstantSpec s) : storage_(s) {}
  explicit PeriodicCoefficient(SinusoidSpec s) : storage_(s) {}
  explicit PeriodicCoefficient(FourierSpec s) : storage_(std::move(s)) {}
  explicit PeriodicCoefficient(TableSpec s) : storage_(std::move(s)) {}

  static PeriodicCoefficient constant(double value) {
    return PeriodicCoefficient(ConstantSpec{value});
  }
  static PeriodicCoefficient sinusoid(double offset, double amplitude,
                                      double omega = 1.0, double phase = 0.0) {
    return PeriodicCoefficient(SinusoidSpec{offset, amplitude, omega, phase});
  }

  CoefficientKind kind() const;

  // c(t mod period). For the table kind fewer than 2 samples is an
  // invalid-coefficient error.
  double eval(double t, double period) const;

  // Enclosure of the range over one period. Exact (closed form) for the
  // constant and sinusoid kinds; for fourier/table the grid extremum is
  // widened by margin * (hi - lo) on both sides, with the lower edge floored
  // at half the sampled minimum so a positive coefficient stays positive.
  Extrema extrema(double period, int grid_n, double margin = 0.01) const;

  // Structural checks plus period compatibility; positivity is checked when
  // require_positive is set (coefficients), only nonnegativity otherwise
  // (delay histories). Throws PercycleError on violation; `name` is used in
  // messages.
  void validate(const char* name, double period, bool require_positive) const;

  template <class V>
  const V* get_if() const {
    return std::get_if<V>(&storage_);
  }

  bool operator==(const PeriodicCoefficient& other) const;

 private:
  std::variant<ConstantSpec, SinusoidSpec, FourierSpec, TableSpec> storage_;
};

}  // namespace percycle
