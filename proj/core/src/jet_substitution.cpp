#include "divcon/jet_substitution.hpp"

#include <algorithm>

namespace divcon {

namespace {

void check_components(const std::vector<std::string>& source,
                      const std::vector<std::string>& target,
                      const std::vector<Polynomial>& components) {
  if (components.size() != target.size()) {
    throw Error(ErrorCode::arity_mismatch, "substitution needs one component per target variable");
  }
  for (std::size_t j = 0; j < components.size(); ++j) {
    if (components[j].variables() != source) {
      throw Error(ErrorCode::arity_mismatch,
                  "component for '" + target[j] + "' is not over the source variables");
    }
    if (components[j].constant_term() != 0) {
      throw Error(ErrorCode::nonzero_constant_term,
                  "component for '" + target[j] + "' has a nonzero constant term");
    }
  }
}

}  // namespace

JetSubstitution::JetSubstitution(std::vector<std::string> source_variables,
                                 std::vector<std::string> target_variables,
                                 std::vector<Polynomial> components, int jet_order, bool exact)
    : source_(std::move(source_variables)),
      target_(std::move(target_variables)),
      jet_order_(jet_order),
      exact_(exact) {
  if (jet_order_ < 1) throw Error(ErrorCode::precondition_violated, "jet order must be positive");
  for (auto& c : components) {
    components_.push_back(exact_ ? c.without_jet_order() : c.truncated(jet_order_));
  }
  check_components(source_, target_, components_);
}

JetSubstitution JetSubstitution::identity(const std::vector<std::string>& variables,
                                          int jet_order) {
  std::vector<Polynomial> comps;
  for (const auto& v : variables) comps.push_back(Polynomial::variable(variables, v));
  JetSubstitution s(variables, variables, comps, jet_order, true);
  return s.with_inverse(comps, jet_order, true);
}

JetSubstitution JetSubstitution::from_images(const std::vector<std::string>& variables,
                                             const std::map<std::string, Polynomial>& images,
                                             int jet_order) {
  std::vector<Polynomial> comps;
  for (const auto& v : variables) {
    auto it = images.find(v);
    comps.push_back(it == images.end() ? Polynomial::variable(variables, v)
                                       : it->second.in_variables(variables));
  }
  for (const auto& [name, p] : images) {
    if (std::find(variables.begin(), variables.end(), name) == variables.end()) {
      throw Error(ErrorCode::unknown_variable, "image given for unknown variable '" + name + "'");
    }
  }
  return JetSubstitution(variables, variables, std::move(comps), jet_order, true);
}

const Polynomial& JetSubstitution::component(std::string_view target) const {
  for (std::size_t j = 0; j < target_.size(); ++j) {
    if (target_[j] == target) return components_[j];
  }
  throw Error(ErrorCode::unknown_variable, "no component for '" + std::string(target) + "'");
}

const std::vector<Polynomial>& JetSubstitution::inverse_components() const {
  if (!inverse_) throw Error(ErrorCode::not_invertible, "substitution carries no inverse");
  return *inverse_;
}

JetSubstitution JetSubstitution::with_inverse(std::vector<Polynomial> inverse, int jet_order,
                                              bool exact) const {
  JetSubstitution out = *this;
  std::vector<Polynomial> stored;
  for (auto& c : inverse) stored.push_back(exact ? c.without_jet_order() : c.truncated(jet_order));
  check_components(target_, source_, stored);
  out.inverse_ = std::move(stored);
  out.inverse_jet_order_ = jet_order;
  out.inverse_exact_ = exact;
  return out;
}

JetSubstitution JetSubstitution::inverse() const {
  const auto& inv = inverse_components();
  JetSubstitution out(target_, source_, inv, inverse_jet_order_, inverse_exact_);
  return out.with_inverse(components_, jet_order_, exact_);
}

RationalMatrix JetSubstitution::linear_part() const {
  RationalMatrix m(target_.size(), std::vector<Rational>(source_.size(), Rational(0)));
  for (std::size_t j = 0; j < components_.size(); ++j) {
    for (std::size_t i = 0; i < source_.size(); ++i) {
      m[j][i] = components_[j].coefficient(Monomial::variable(i));
    }
  }
  return m;
}

bool JetSubstitution::is_identity() const {
  if (source_ != target_) return false;
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (components_[j] != Polynomial::variable(source_, target_[j])) return false;
  }
  return true;
}

Polynomial substitute_jet(const Polynomial& f, const JetSubstitution& sigma, int N) {
  if (f.variables() != sigma.target_variables()) {
    throw Error(ErrorCode::arity_mismatch,
                "polynomial variables do not match the substitution's target variables");
  }
  if (!sigma.exact() && N > sigma.jet_order()) {
    throw Error(ErrorCode::precondition_violated,
                "requested degree " + std::to_string(N) + " exceeds the substitution jet order " +
                    std::to_string(sigma.jet_order()));
  }
  Polynomial out = compose_jet(f.without_jet_order(), sigma.components(), N);
  if (f.jet_order() && *f.jet_order() < N) out = out.truncated(*f.jet_order());
  return out;
}

}  // namespace divcon
