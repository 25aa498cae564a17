#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divcon/jet_substitution.hpp"
#include "divcon/polynomial.hpp"

namespace divcon {

// Normal form with its coefficients recorded instead of scaled to 1. Over the
// complex numbers `polynomial` and `unit_form` differ by a diagonal scaling.
struct MarkedNormalForm {
  Polynomial polynomial;
  Polynomial unit_form;
  std::vector<std::pair<Monomial, Rational>> marking;
  // Maps the input to `polynomial`: substitute_jet(input, witness, jet_order).
  JetSubstitution witness;
  WeightVector weights;
  int jet_order = 0;
};

struct ReductionOptions {
  // Working jet order; defaults to the determinacy bound mu + 1.
  std::optional<int> jet_order;
};

// Makes x1*x2 the only monomial of the ideal (x1, x2).
MarkedNormalForm split_quadratic(const Polynomial& f, const WeightVector& w,
                                 const std::pair<std::string, std::string>& pair,
                                 const ReductionOptions& options = {});

// Removes every monomial of weight above wt(f_0) outside a Milnor basis of f_0.
MarkedNormalForm weighted_normal_form(const Polynomial& f, const WeightVector& w,
                                      const ReductionOptions& options = {});

// Reduces f to its least-weight part when that part is simple. Under the
// weights (4,3,2,1) on four variables, E6 germs of weight 6 whose leading part
// is not itself simple go through reduce_to_e6_form.
MarkedNormalForm reduce_to_simple(const Polynomial& f, const WeightVector& w,
                                  const ReductionOptions& options = {});

// Brings an E6 germ of weight 6 under (4,3,2,1) to
// alpha*x^2 + beta*y^2 + gamma*z^3 + delta*x*t^2 by a weight-respecting change.
MarkedNormalForm reduce_to_e6_form(const Polynomial& f, const ReductionOptions& options = {});

}  // namespace divcon
