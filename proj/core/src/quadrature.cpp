#include "percycle/quadrature.hpp"

#include "percycle/errors.hpp"

namespace percycle {

double simpson(const std::function<double(double)>& f, double a, double b,
               int n) {
  if (n < 2) n = 2;
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) {
    acc += f(a + i * h) * (i % 2 != 0 ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

double periodic_average(const std::function<double(double)>& f, double T,
                        int n) {
  if (!(T > 0.0)) {
    throw PercycleError(ErrorCode::precondition,
                        "periodic_average needs a positive period");
  }
  return simpson(f, 0.0, T, n) / T;
}

}  // namespace percycle
