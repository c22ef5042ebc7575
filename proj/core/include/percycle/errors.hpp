#pragma once

#include <stdexcept>
#include <string>

namespace percycle {

enum class ErrorCode {
  invalid_coefficient,  // malformed periodic coefficient
  invalid_params,       // parameter set fails validation
  domain_error,         // state left the admissible domain
  no_solution,          // scalar inversion target out of range
  bounds_unavailable,   // bound chain cannot produce a usable box
  hypothesis_failed,    // a required smallness condition does not hold
  certificate_invalid,  // degree queried on a failing certificate
  precondition,         // API contract violated by the caller
  newton_failure,       // shooting iteration did not converge
  step_failure,         // integrator ran out of steps or step size
  config_error,         // config file malformed or inconsistent
  io_error,             // file could not be read or written
  internal,             // unexpected failure
};

const char* error_code_name(ErrorCode code);

class PercycleError : public std::runtime_error {
 public:
  PercycleError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace percycle
