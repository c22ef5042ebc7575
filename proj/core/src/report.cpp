#include "percycle/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ostream>

#include "json.hpp"

namespace percycle::report {

std::string format_double(double v) {
  char buf[40];
  // Shortest decimal form that parses back to the same double.
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

void write_csv(std::ostream& os, const solver::DenseOutput& dense, double t0,
               double t1, int points) {
  if (points < 2) points = 2;
  os << "t,M,P0,P1,P2,PN\n";
  for (int k = 0; k < points; ++k) {
    const double t = t0 + (t1 - t0) * k / (points - 1);
    const State5 v = dense.eval(t);
    os << format_double(t);
    for (double x : v) os << ',' << format_double(x);
    os << '\n';
  }
}

std::string error_json(ErrorCode code, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"]["code"] = error_code_name(code);
  j["error"]["message"] = message;
  return j.dump(1);
}

}  // namespace percycle::report
