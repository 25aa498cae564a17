#pragma once

#include <random>

#include "divcon/jet_substitution.hpp"
#include "divcon/polynomial.hpp"

namespace divcon::testing {

class GermSource {
 public:
  explicit GermSource(std::uint32_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational coefficient(int spread = 3) {
    int p = 0;
    while (p == 0) p = uniform(-spread, spread);
    Rational c(p, uniform(1, 3));
    c.canonicalize();
    return c;
  }

  Monomial monomial(std::size_t arity, int lo, int hi) {
    const int d = uniform(lo, hi);
    std::vector<int> e(arity, 0);
    for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(arity) - 1))];
    return Monomial(std::span<const int>(e));
  }

  // `count` random terms of total degree in [lo, hi].
  Polynomial polynomial(const std::vector<std::string>& vars, int count, int lo, int hi) {
    std::vector<Polynomial::Term> terms;
    for (int i = 0; i < count; ++i) terms.emplace_back(monomial(vars.size(), lo, hi), coefficient());
    return Polynomial(vars, std::move(terms));
  }

  // Terms of w-weight strictly above d and total degree at most max_degree.
  Polynomial above_weight(const WeightVector& w, int d, int count, int max_degree) {
    const auto& vars = w.names();
    std::vector<Polynomial::Term> terms;
    while (static_cast<int>(terms.size()) < count) {
      Monomial m = monomial(vars.size(), 1, max_degree);
      if (monomial_weight(m, w.values()) > d) terms.emplace_back(m, coefficient());
    }
    return Polynomial(vars, std::move(terms));
  }

  // Invertible linear change with small rational entries.
  JetSubstitution linear_change(const std::vector<std::string>& vars) {
    const std::size_t n = vars.size();
    while (true) {
      std::vector<Polynomial> comps;
      RationalMatrix m(n, std::vector<Rational>(n));
      for (std::size_t i = 0; i < n; ++i) {
        Polynomial c(vars);
        for (std::size_t j = 0; j < n; ++j) {
          m[i][j] = uniform(-2, 2);
          c += Polynomial::monomial(vars, Monomial::variable(j), m[i][j]);
        }
        comps.push_back(c);
      }
      if (determinant(m) != 0) return JetSubstitution(vars, vars, std::move(comps), 1, true);
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  static Rational determinant(RationalMatrix a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && a[p][c] == 0) ++p;
      if (p == n) return 0;
      if (p != c) {
        std::swap(a[p], a[c]);
        det = -det;
      }
      det *= a[c][c];
      for (std::size_t r = c + 1; r < n; ++r) {
        const Rational f = a[r][c] / a[c][c];
        for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      }
    }
    return det;
  }

  std::mt19937 rng_;
};

}  // namespace divcon::testing
