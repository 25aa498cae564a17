#pragma once

#include <vector>

#include "divcon/polynomial.hpp"

namespace divcon {

struct MilnorData {
  int milnor_number = 0;
  // Monomial basis of the Milnor algebra, ascending graded-lex.
  std::vector<Monomial> basis;
  // Least k with every degree-k monomial in j(f) + m^{k+1}, hence m^k in j(f).
  int stabilization_order = 0;
};

struct MilnorOptions {
  int cap = 64;
};

MilnorData milnor_data(const Polynomial& f, const MilnorOptions& options = {});

// Monomial basis of the Milnor algebra of a quasihomogeneous isolated f0 of
// weight d0, homogeneous for the weights; ascending graded-lex.
std::vector<Monomial> graded_milnor_basis(const Polynomial& f0, const WeightVector& w);

// Dimension of the polynomials of degree <= k modulo (j(f) + m^{k+1}).
int milnor_number_at_order(const Polynomial& f, int k);

// Truncation of f at degree N, right equivalent to f when N >= mu(f) + 1.
Polynomial determinacy_truncate(const Polynomial& f, int N);

}  // namespace divcon
