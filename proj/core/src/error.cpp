#include "divcon/error.hpp"

namespace divcon {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::missing_weight: return "missing-weight";
    case ErrorCode::invalid_weight: return "invalid-weight";
    case ErrorCode::arity_mismatch: return "arity-mismatch";
    case ErrorCode::nonzero_constant_term: return "nonzero-constant-term";
    case ErrorCode::inexact_division: return "inexact-division";
    case ErrorCode::exponent_overflow: return "exponent-overflow";
    case ErrorCode::non_isolated: return "non-isolated";
    case ErrorCode::smooth_point: return "smooth-point";
    case ErrorCode::bound_violated: return "bound-violated";
    case ErrorCode::not_invertible: return "not-invertible";
    case ErrorCode::singular_linear_part: return "singular-linear-part";
    case ErrorCode::precondition_violated: return "precondition-violated";
    case ErrorCode::not_simple_leading_part: return "not-simple-leading-part";
    case ErrorCode::not_hypersurface_germ: return "not-hypersurface-germ";
    case ErrorCode::multiplicity_mismatch: return "multiplicity-mismatch";
    case ErrorCode::unsupported_germ: return "unsupported-germ";
    case ErrorCode::unsupported_shape: return "unsupported-shape";
    case ErrorCode::parameter_constraint: return "parameter-constraint";
    case ErrorCode::zero_weight: return "zero-weight";
    case ErrorCode::syntax: return "syntax";
    case ErrorCode::unknown_variable: return "unknown-variable";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace divcon
