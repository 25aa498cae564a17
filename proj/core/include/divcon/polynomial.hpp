#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divcon/error.hpp"

namespace divcon {

using Rational = mpq_class;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Order of a series; std::nullopt stands for infinity (the zero series).
using Valuation = std::optional<int>;

std::string to_string(const Valuation& v);
std::string to_string(const Rational& q);

inline constexpr std::size_t kMaxVariables = 16;

// Exponent vector with cached total degree. Ordered graded-lexicographically:
// total degree first, then the first differing exponent (x > y > z > t).
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t index, int exponent = 1);

  int operator[](std::size_t i) const { return exponents_[i]; }
  void set(std::size_t i, int exponent);
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Requires that `divisor` divides this monomial.
  Monomial quotient(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint8_t, kMaxVariables> exponents_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// Sparse polynomial over named variables with rational coefficients. Terms are
// kept sorted in ascending graded-lex order with no zero coefficients. A jet
// order N marks the value as known only modulo terms of total degree > N.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);
  Polynomial(std::vector<std::string> variables, std::vector<Term> terms,
             std::optional<int> jet_order = std::nullopt);

  static Polynomial constant(std::vector<std::string> variables, const Rational& c);
  static Polynomial variable(std::vector<std::string> variables, std::string_view name);
  static Polynomial monomial(std::vector<std::string> variables, const Monomial& m,
                             const Rational& c = 1);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t arity() const { return variables_.size(); }
  std::size_t index_of(std::string_view name) const;
  std::optional<std::size_t> find_variable(std::string_view name) const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::optional<int> jet_order() const { return jet_order_; }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  // Largest total degree of a stored term; -1 for zero.
  int degree() const;

  Polynomial truncated(int N) const;
  Polynomial without_jet_order() const;
  Polynomial homogeneous_part(int degree) const;
  Polynomial derivative(std::size_t index) const;
  Polynomial pow(unsigned exponent) const;
  Polynomial with_unit_coefficients() const;
  // Same value over another variable list; every variable that occurs must
  // be present in `variables`.
  Polynomial in_variables(const std::vector<std::string>& variables) const;

  std::string to_string() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  // Compares variables and terms; the jet order is not part of the value.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void normalize();
  void require_same_variables(const Polynomial& other) const;

  std::vector<std::string> variables_;
  std::vector<Term> terms_;
  std::optional<int> jet_order_;
};

// Product truncated at total degree N.
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int N);

class WeightVector {
 public:
  WeightVector() = default;
  WeightVector(std::vector<std::string> names, std::vector<int> weights);
  static WeightVector uniform(const std::vector<std::string>& names, int weight = 1);

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& values() const { return weights_; }
  std::size_t size() const { return names_.size(); }
  bool contains(std::string_view name) const;
  int of(std::string_view name) const;
  std::vector<int> for_variables(const std::vector<std::string>& variables) const;
  int sum() const;
  int max() const;
  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

int monomial_weight(const Monomial& m, std::span<const int> weights);

Valuation multiplicity(const Polynomial& f);
Valuation weight(const Polynomial& f, const WeightVector& w);
Polynomial quasihomogeneous_part(const Polynomial& f, const WeightVector& w, int d);

// Symmetric M with quadratic part of f equal to x^T M x.
RationalMatrix quadratic_form_matrix(const Polynomial& f);
std::size_t quadratic_rank(const Polynomial& f);

std::vector<Polynomial> jacobian_generators(const Polynomial& f);

// f / x_index^k; throws inexact_division when a term is not divisible.
Polynomial divide_by_variable_power(const Polynomial& f, std::size_t index, int k);

// f(images[0], ..., images[n-1]) truncated at degree N. All images share one
// variable list, which becomes the variable list of the result.
Polynomial compose_jet(const Polynomial& f, std::span<const Polynomial> images, int N);
// Untruncated composition.
Polynomial compose_exact(const Polynomial& f, std::span<const Polynomial> images);

// Monomial enumerations, each in ascending graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t arity, int degree);
std::vector<Monomial> monomials_up_to_degree(std::size_t arity, int degree);
std::vector<Monomial> monomials_of_weight(std::span<const int> weights, int weight);

}  // namespace divcon
