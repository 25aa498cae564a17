#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace divcon {

enum class ErrorCode {
  missing_weight,
  invalid_weight,
  arity_mismatch,
  nonzero_constant_term,
  inexact_division,
  exponent_overflow,
  non_isolated,
  smooth_point,
  bound_violated,
  not_invertible,
  singular_linear_part,
  precondition_violated,
  not_simple_leading_part,
  not_hypersurface_germ,
  multiplicity_mismatch,
  unsupported_germ,
  unsupported_shape,
  parameter_constraint,
  zero_weight,
  syntax,
  unknown_variable,
  internal,
};

// Stable identifier used in structured output, e.g. "non-isolated".
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace divcon
