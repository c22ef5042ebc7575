#pragma once

#include <functional>

namespace percycle {

// Composite Simpson rule over [a, b] with n subintervals (n is bumped to the
// next even number if odd). Nodes are a + k*(b-a)/n.
double simpson(const std::function<double(double)>& f, double a, double b,
               int n);

// Average of f over one period: simpson(f, 0, T, n) / T.
double periodic_average(const std::function<double(double)>& f, double T,
                        int n);

}  // namespace percycle
