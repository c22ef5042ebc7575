#pragma once

#include <iosfwd>
#include <string>

#include "percycle/errors.hpp"
#include "percycle/integrate.hpp"

namespace percycle::report {

// Shortest representation that round-trips a double (printf %.17g trimmed
// via re-parse: 17 digits only when needed).
std::string format_double(double v);

// Trajectory CSV: header "t,M,P0,P1,P2,PN", one row per sample time,
// uniform over [t0, t1] inclusive, LF line endings.
void write_csv(std::ostream& os, const solver::DenseOutput& dense, double t0,
               double t1, int points);

// Canonical error object emitted on exit code 1.
std::string error_json(ErrorCode code, const std::string& message);

}  // namespace percycle::report
