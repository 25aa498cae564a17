#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divcon/blowup_geometry.hpp"
#include "divcon/classifier.hpp"
#include "divcon/jet_substitution.hpp"
#include "divcon/polynomial.hpp"

namespace divcon {

enum class ContractionKind { smooth, type1, type2, type3 };

std::string to_string(ContractionKind kind);

struct ContractionClass {
  ContractionKind kind = ContractionKind::type1;
  WeightVector weights;
  // type1: r1 <= r2 and a; smooth: a <= b.
  int r1 = 0;
  int r2 = 0;
  int a = 0;
  int b = 0;
  int cA_index = 0;
  int discrepancy = 0;
  // Absent for the smooth centre.
  std::optional<Polynomial> representative;
};

struct Cardinality {
  enum class Kind { finite, countably_infinite, uncountable };
  Kind kind = Kind::finite;
  long value = 0;

  std::string to_string() const;
  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

struct ContractionCensus {
  // Set for the smooth centre, whose classes are listed symbolically.
  std::optional<std::string> family;
  std::vector<ContractionClass> classes;
  Cardinality count_local_analytic;
  Cardinality count_over_base;
  int a_max = 0;
  int cA_index = 0;
  SingularityTag singularity;
};

struct WeightSystem {
  int r1 = 0;
  int r2 = 0;
  int a = 0;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
  friend auto operator<=>(const WeightSystem& p, const WeightSystem& q) {
    if (p.a != q.a) return p.a <=> q.a;
    return p.r1 <=> q.r1;
  }
};

struct AdmissibleSystems {
  std::vector<WeightSystem> systems;
  // Largest a passing the weight test.
  int a_max = 0;
  // Largest a allowed by the Milnor bound n((n+1)a - 1) <= mu + 1.
  int a_bound = 0;
  // The residual in Tschirnhaus form, on which the weight test runs.
  Polynomial representative;
};

struct AtlasOptions {
  std::optional<int> max_a;
};

// Systems (r1, r2, a) with r1 <= r2, gcd(a, r1) = 1 and r1 + r2 = a(n+1) for
// which g has weight a(n+1) under z -> a, t -> 1; g is a germ in two variables.
AdmissibleSystems admissible_weight_systems(const Polynomial& g, int n,
                                            const AtlasOptions& options = {});

ContractionCensus enumerate_contractions(const Germ& germ, const AtlasOptions& options = {});

struct MembershipAttempt {
  ContractionKind kind;
  bool shape_matched = false;
  std::string failure;
};

struct Membership {
  std::optional<ContractionClass> match;
  std::string reason;
  std::vector<MembershipAttempt> attempts;

  bool member() const { return match.has_value(); }
};

Membership decide_membership(const Germ& germ, const WeightVector& w);

// Automorphisms fixing the representative of a class: Phi_c for type1 with
// r1 = 1 (params = {c}) and Psi_{u,v,w} for type3 (params = {u, v, w}).
JetSubstitution family_witness(const ContractionClass& cls, const std::vector<Rational>& params);

}  // namespace divcon
