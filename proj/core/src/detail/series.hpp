#pragma once

#include <optional>

#include "divcon/polynomial.hpp"

namespace divcon::detail {

// 1/u modulo degree > N; u must have a nonzero constant term.
Polynomial series_reciprocal(const Polynomial& u, int N);
// Square root of u with constant term 1, modulo degree > N.
Polynomial series_sqrt(const Polynomial& u, int N);
// Exact square root of a rational square, if any.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace divcon::detail
