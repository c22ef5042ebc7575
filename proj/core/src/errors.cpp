#include "percycle/errors.hpp"

namespace percycle {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_coefficient: return "invalid_coefficient";
    case ErrorCode::invalid_params: return "invalid_params";
    case ErrorCode::domain_error: return "domain_error";
    case ErrorCode::no_solution: return "no_solution";
    case ErrorCode::bounds_unavailable: return "bounds_unavailable";
    case ErrorCode::hypothesis_failed: return "hypothesis_failed";
    case ErrorCode::certificate_invalid: return "certificate_invalid";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::newton_failure: return "newton_failure";
    case ErrorCode::step_failure: return "step_failure";
    case ErrorCode::config_error: return "config_error";
    case ErrorCode::io_error: return "io_error";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace percycle
