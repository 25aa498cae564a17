#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "divcon/jet_substitution.hpp"
#include "divcon/normal_form.hpp"
#include "divcon/polynomial.hpp"

namespace divcon::detail {

struct Reduction {
  Polynomial polynomial;
  JetSubstitution witness;
};

// Removes every monomial of the ideal generated by the block variables except
// the quadratic block monomials of weight wt(f). The block's Hessian must be
// invertible. Works modulo degree > N.
Reduction split_block(const Polynomial& f, std::span<const int> weights,
                      const std::vector<std::size_t>& block, int N);

// Adds an inverse of order N, checks the weight condition and fills the marking.
MarkedNormalForm finish_normal_form(Polynomial polynomial, JetSubstitution witness,
                                    const WeightVector& w, int N);

}  // namespace divcon::detail
