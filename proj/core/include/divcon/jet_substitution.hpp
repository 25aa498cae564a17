#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divcon/polynomial.hpp"

namespace divcon {

// Coordinate change y_j = psi_j(x) given per target variable as a polynomial
// in the source variables. Substituting into f(y) yields f(psi(x)). Components
// are trusted modulo degree > jet_order unless the map is marked exact.
class JetSubstitution {
 public:
  JetSubstitution() = default;
  JetSubstitution(std::vector<std::string> source_variables,
                  std::vector<std::string> target_variables, std::vector<Polynomial> components,
                  int jet_order, bool exact = false);

  static JetSubstitution identity(const std::vector<std::string>& variables, int jet_order);
  // Variables absent from `images` are fixed; images are exact polynomials.
  static JetSubstitution from_images(const std::vector<std::string>& variables,
                                     const std::map<std::string, Polynomial>& images,
                                     int jet_order);

  const std::vector<std::string>& source_variables() const { return source_; }
  const std::vector<std::string>& target_variables() const { return target_; }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& component(std::string_view target) const;
  int jet_order() const { return jet_order_; }
  bool exact() const { return exact_; }

  bool has_inverse() const { return inverse_.has_value(); }
  // Components of the inverse, one per source variable, in target variables.
  const std::vector<Polynomial>& inverse_components() const;
  int inverse_jet_order() const { return inverse_jet_order_; }
  bool inverse_exact() const { return inverse_exact_; }
  JetSubstitution with_inverse(std::vector<Polynomial> inverse, int jet_order,
                               bool exact = false) const;
  // The inverse map, with this map as its inverse.
  JetSubstitution inverse() const;

  // Rows indexed by target variables, columns by source variables.
  RationalMatrix linear_part() const;
  bool is_identity() const;

 private:
  std::vector<std::string> source_;
  std::vector<std::string> target_;
  std::vector<Polynomial> components_;
  int jet_order_ = 1;
  bool exact_ = false;
  std::optional<std::vector<Polynomial>> inverse_;
  int inverse_jet_order_ = 0;
  bool inverse_exact_ = false;
};

// f(psi) truncated at N. f lives over the target variables of sigma.
Polynomial substitute_jet(const Polynomial& f, const JetSubstitution& sigma, int N);

}  // namespace divcon
