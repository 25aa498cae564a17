#pragma once

#include <string>
#include <vector>

#include "divcon/jet_substitution.hpp"
#include "divcon/polynomial.hpp"

namespace divcon {

// sigma with inverse components such that both compositions are the identity
// modulo degree > N.
JetSubstitution invert_jet(const JetSubstitution& sigma, int N);

// The map "apply first, then second": substitute_jet(f, compose(a, b), N)
// equals substitute_jet(substitute_jet(f, a, N), b, N).
JetSubstitution compose(const JetSubstitution& first, const JetSubstitution& second);

struct WeightViolation {
  bool inverse_direction = false;
  std::string variable;
  Valuation component_weight;
  int required = 0;
};

struct WeightCertificate {
  bool respecting = true;
  std::vector<WeightViolation> violations;

  std::string to_string() const;
};

// psi_j has weight >= w_dst(y_j) and theta_i has weight >= w_src(x_i).
WeightCertificate verify_weight_respecting(const JetSubstitution& sigma,
                                           const WeightVector& w_src,
                                           const WeightVector& w_dst);

// sigma carrying an inverse; computes one at the given order if missing.
JetSubstitution ensure_inverse(const JetSubstitution& sigma, int N);

}  // namespace divcon
