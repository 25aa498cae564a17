#pragma once

#include <optional>
#include <string>

#include "divcon/jet_substitution.hpp"
#include "divcon/normal_form.hpp"
#include "divcon/polynomial.hpp"

namespace divcon {

enum class SingularityType { smooth, A, D, E6, E7, E8, cA, non_simple, unrecognized };

struct SingularityTag {
  SingularityType type = SingularityType::unrecognized;
  // k for A(k) and D(k), n for cA(n).
  int index = 0;

  bool is_ade() const;
  std::string to_string() const;

  friend bool operator==(const SingularityTag&, const SingularityTag&) = default;
};

struct SingularityReport {
  Valuation multiplicity;
  std::size_t quadratic_rank = 0;
  std::size_t corank = 0;
  int milnor_number = 0;
  SingularityTag type;
  std::optional<int> cA_index;
  // The residual of the split form, over the non-split variables.
  std::optional<Polynomial> residual;
  std::optional<JetSubstitution> witness;
  std::optional<MarkedNormalForm> normal_form;
};

struct ClassifyOptions {
  bool with_witness = true;
  // Jet order for witnesses; defaults to the determinacy bound mu + 1.
  std::optional<int> jet_order;
};

// ADE recognition for an isolated singular germ in at least two variables.
SingularityReport classify_simple(const Polynomial& f, const ClassifyOptions& options = {});

// Compound-A index of an isolated germ in four variables.
SingularityReport cA_index(const Polynomial& f);

bool is_simple(const Polynomial& f);

// Smooth for germs with a linear part; otherwise the ADE tag, plus the cA
// index for germs in four variables.
SingularityReport classify(const Polynomial& f, const ClassifyOptions& options = {});

}  // namespace divcon
