#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "divcon/jet_substitution.hpp"
#include "divcon/polynomial.hpp"

namespace divcon {

// The smooth 3-fold germ (A^3, 0) over the given coordinates.
struct SmoothAmbient {
  std::vector<std::string> variables{"x", "y", "z"};
};

using Germ = std::variant<SmoothAmbient, Polynomial>;

// Affine patch x_j != 0 of a weighted blowup: x_j = u^{w_j}, x_i = u^{w_i} x_i
// for i != j. Chart coordinates reuse the names of the original variables
// with x_j replaced by the parameter u.
struct BlowupChart {
  std::string chart_variable;
  std::string parameter;
  std::vector<std::string> variables;
  // One image per original variable, over the chart coordinates.
  std::vector<Polynomial> substitution;
  // Order of the cyclic group acting on the patch; 1 for an affine chart.
  int quotient_order = 1;
  std::optional<Polynomial> transform;
  Polynomial exceptional;
};

std::vector<BlowupChart> charts(const WeightVector& w);

// (f o substitution) / u^{wt f}.
BlowupChart strict_transform(const Polynomial& f, const WeightVector& w, const BlowupChart& chart);

// sum(w) - 1 for the smooth ambient and sum(w) - wt(f) - 1 for a hypersurface
// germ in four variables.
int discrepancy(const WeightVector& w, const Germ& germ);

struct LaurentObstruction {
  std::string chart_variable;
  bool inverse_direction = false;
  std::string component;
  // The offending term, e.g. "x/u".
  std::string term;
};

struct LiftCertificate {
  bool lifts = false;
  bool weight_respecting = false;
  std::vector<LaurentObstruction> obstructions;

  std::string to_string() const;
};

// Whether sigma and its inverse are regular on every affine chart of the
// weighted blowup.
LiftCertificate chart_regularity(const JetSubstitution& sigma, const WeightVector& w);

LiftCertificate lift_check(const JetSubstitution& sigma, const WeightVector& w, const Germ& germ);

struct AlgebraizedGraph {
  std::vector<Polynomial> generators;
  WeightVector weights;
};

// I + (psi_j^{<w_j} - y_j) over the variables (x, y), weights 1 on x and w_y on y.
// w_y lists one weight per target variable of psi.
AlgebraizedGraph algebraize(const std::vector<Polynomial>& ideal, const JetSubstitution& psi,
                            const std::vector<int>& w_y);

}  // namespace divcon
