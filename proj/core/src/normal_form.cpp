#include "divcon/normal_form.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "detail/linear_algebra.hpp"
#include "detail/series.hpp"
#include "detail/splitting.hpp"
#include "divcon/local_algebra.hpp"
#include "divcon/weight_maps.hpp"

namespace divcon {

namespace detail {

Reduction split_block(const Polynomial& f, std::span<const int> weights,
                      const std::vector<std::size_t>& block, int N) {
  const auto& vars = f.variables();
  Polynomial F = f.truncated(N).without_jet_order();
  Valuation low = Valuation();
  for (const auto& [m, c] : F.terms()) {
    int v = monomial_weight(m, weights);
    if (!low || v < *low) low = v;
  }
  if (!low) throw Error(ErrorCode::precondition_violated, "cannot split the zero polynomial");
  const int d0 = *low;
  const std::size_t r = block.size();

  std::vector<bool> in_block(vars.size(), false);
  for (auto b : block) in_block[b] = true;
  auto in_ideal = [&](const Monomial& m) {
    for (auto b : block) {
      if (m[b] > 0) return true;
    }
    return false;
  };
  auto is_block_monomial = [&](const Monomial& m) {
    if (m.degree() != 2 || monomial_weight(m, weights) != d0) return false;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (m[i] > 0 && !in_block[i]) return false;
    }
    return true;
  };

  RationalMatrix hessian(r, std::vector<Rational>(r, Rational(0)));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      Monomial m = Monomial::variable(block[a]) * Monomial::variable(block[b]);
      if (monomial_weight(m, weights) != d0) continue;
      Rational c = F.coefficient(m);
      hessian[a][b] = a == b ? c * 2 : c;
    }
  }
  auto inverse = matrix_inverse(hessian);
  if (!inverse) {
    throw Error(ErrorCode::precondition_violated, "quadratic block is degenerate");
  }

  JetSubstitution witness = JetSubstitution::identity(vars, N);
  int level = d0;
  int rounds = 0;
  const int round_cap = 4 * (N + 4);
  while (true) {
    Valuation next;
    for (const auto& [m, c] : F.terms()) {
      if (!in_ideal(m) || is_block_monomial(m)) continue;
      int v = monomial_weight(m, weights);
      if (!next || v < *next) next = v;
    }
    if (!next) break;
    if (*next < level) throw Error(ErrorCode::internal, "splitting reintroduced a lower weight");
    if (*next == level) {
      if (++rounds > round_cap) throw Error(ErrorCode::internal, "splitting did not converge");
    } else {
      level = *next;
      rounds = 1;
    }
    std::vector<Polynomial> q(r, Polynomial(vars));
    for (const auto& [m, c] : F.terms()) {
      if (!in_ideal(m) || is_block_monomial(m)) continue;
      if (monomial_weight(m, weights) != level) continue;
      for (std::size_t a = 0; a < r; ++a) {
        if (m[block[a]] == 0) continue;
        q[a] += Polynomial::monomial(vars, m.quotient(Monomial::variable(block[a])), c);
        break;
      }
    }
    std::vector<Polynomial> comps;
    for (const auto& v : vars) comps.push_back(Polynomial::variable(vars, v));
    for (std::size_t b = 0; b < r; ++b) {
      for (std::size_t a = 0; a < r; ++a) {
        if ((*inverse)[b][a] != 0) comps[block[b]] -= q[a] * (*inverse)[b][a];
      }
    }
    JetSubstitution step(vars, vars, std::move(comps), N);
    F = substitute_jet(F, step, N).without_jet_order();
    witness = compose(witness, step);
  }
  return {F, witness};
}

MarkedNormalForm finish_normal_form(Polynomial polynomial, JetSubstitution witness,
                                    const WeightVector& w, int N) {
  if (!witness.has_inverse()) witness = invert_jet(witness, N);
  WeightCertificate cert = verify_weight_respecting(witness, w, w);
  if (!cert.respecting) {
    throw Error(ErrorCode::internal, "reduction produced a witness that is " + cert.to_string());
  }
  MarkedNormalForm out;
  out.polynomial = polynomial.truncated(N).without_jet_order();
  out.unit_form = out.polynomial.with_unit_coefficients();
  for (const auto& [m, c] : out.polynomial.terms()) out.marking.emplace_back(m, c);
  out.witness = std::move(witness);
  out.weights = w;
  out.jet_order = N;
  return out;
}

}  // namespace detail

namespace {

void reject_degenerate(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::precondition_violated, "the zero polynomial");
  if (f.constant_term() != 0) {
    throw Error(ErrorCode::precondition_violated, "f is a unit (nonzero constant term)");
  }
}

int default_order(const Polynomial& f, const ReductionOptions& options) {
  if (options.jet_order) return *options.jet_order;
  return milnor_data(f).milnor_number + 1;
}

Polynomial var(const std::vector<std::string>& vars, std::size_t i) {
  return Polynomial::variable(vars, vars[i]);
}

}  // namespace

MarkedNormalForm split_quadratic(const Polynomial& f, const WeightVector& w,
                                 const std::pair<std::string, std::string>& pair,
                                 const ReductionOptions& options) {
  reject_degenerate(f);
  const auto& vars = f.variables();
  const std::size_t i1 = f.index_of(pair.first);
  const std::size_t i2 = f.index_of(pair.second);
  if (i1 == i2) throw Error(ErrorCode::precondition_violated, "split pair needs two variables");
  auto weights = w.for_variables(vars);
  const Monomial x1x2 = Monomial::variable(i1) * Monomial::variable(i2);
  const Rational c = f.coefficient(x1x2);
  if (c == 0) {
    throw Error(ErrorCode::precondition_violated,
                "coefficient of " + pair.first + "*" + pair.second + " is zero");
  }
  const int block_weight = weights[i1] + weights[i2];
  if (block_weight != *weight(f, w)) {
    throw Error(ErrorCode::precondition_violated,
                "weight of " + pair.first + "*" + pair.second + " exceeds weight(f, w)");
  }
  const int N = default_order(f, options);

  Polynomial F = f.truncated(N).without_jet_order();
  JetSubstitution witness = JetSubstitution::identity(vars, N);
  if (weights[i1] == weights[i2]) {
    const Rational alpha = F.coefficient(Monomial::variable(i1, 2));
    const Rational beta = F.coefficient(Monomial::variable(i2, 2));
    std::map<std::string, Polynomial> images;
    const Polynomial X1 = var(vars, i1);
    const Polynomial X2 = var(vars, i2);
    if (alpha != 0 && beta == 0) {
      images.emplace(vars[i2], X2 - X1 * (alpha / c));
    } else if (alpha == 0 && beta != 0) {
      images.emplace(vars[i1], X1 - X2 * (beta / c));
    } else if (alpha != 0 && beta != 0) {
      const Rational disc = c * c - alpha * beta * 4;
      if (disc == 0) throw Error(ErrorCode::precondition_violated, "quadratic block is degenerate");
      auto root = detail::rational_sqrt(disc);
      if (!root) {
        throw Error(ErrorCode::precondition_violated,
                    "the quadratic block does not factor over the rationals");
      }
      const Rational s1 = (-c + *root) / (beta * 2);
      const Rational s2 = (-c - *root) / (beta * 2);
      Polynomial old1 = (X1 - X2) * (1 / (s2 - s1));
      images.emplace(vars[i1], old1);
      images.emplace(vars[i2], X1 + old1 * s1);
    }
    if (!images.empty()) {
      JetSubstitution linear = JetSubstitution::from_images(vars, images, N);
      F = substitute_jet(F, linear, N).without_jet_order();
      witness = compose(witness, linear);
    }
  }
  detail::Reduction red = detail::split_block(F, weights, {i1, i2}, N);
  witness = compose(witness, red.witness);
  return detail::finish_normal_form(red.polynomial, witness, w, N);
}

MarkedNormalForm weighted_normal_form(const Polynomial& f, const WeightVector& w,
                                      const ReductionOptions& options) {
  reject_degenerate(f);
  const auto& vars = f.variables();
  const std::size_t n = vars.size();
  auto weights = w.for_variables(vars);
  const int d0 = *weight(f, w);
  const Polynomial f0 = quasihomogeneous_part(f, w, d0);
  const std::vector<Monomial> graded = graded_milnor_basis(f0, w);
  const int mu = static_cast<int>(graded.size());
  const int N = options.jet_order ? *options.jet_order : mu + 1;
  if (N <= mu) {
    throw Error(ErrorCode::bound_violated, "jet order must exceed the Milnor number");
  }
  std::unordered_set<Monomial, MonomialHash> basis(graded.begin(), graded.end());
  const std::vector<Polynomial> grad = jacobian_generators(f0);

  Polynomial F = f.truncated(N).without_jet_order();
  JetSubstitution witness = JetSubstitution::identity(vars, N);
  int last = d0;
  while (true) {
    Valuation level;
    for (const auto& [m, c] : F.terms()) {
      int v = monomial_weight(m, weights);
      if (v > d0 && basis.count(m) == 0 && (!level || v < *level)) level = v;
    }
    if (!level) break;
    if (*level <= last) throw Error(ErrorCode::internal, "normal form revisited a weight level");
    last = *level;
    const int d = *level;

    const std::vector<Monomial> columns = monomials_of_weight(weights, d);
    std::unordered_map<Monomial, int, MonomialHash> column;
    for (std::size_t i = 0; i < columns.size(); ++i) column.emplace(columns[i], static_cast<int>(i));
    auto to_row = [&](const Polynomial& p) {
      detail::SparseRow row;
      for (const auto& [m, c] : p.terms()) row.emplace_back(column.at(m), c);
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
      return row;
    };

    detail::Echelon echelon(true);
    std::vector<std::pair<std::size_t, Monomial>> generators;
    for (std::size_t i = 0; i < n; ++i) {
      if (grad[i].is_zero()) continue;
      for (const auto& nu : monomials_of_weight(weights, d - d0 + weights[i])) {
        Polynomial row = grad[i] * Polynomial::monomial(vars, nu);
        echelon.insert(to_row(row), generators.size());
        generators.emplace_back(i, nu);
      }
    }
    const auto reduction = echelon.reduce(to_row(quasihomogeneous_part(F, w, d)));
    for (const auto& [col, c] : reduction.remainder) {
      if (basis.count(columns[static_cast<std::size_t>(col)]) == 0) {
        throw Error(ErrorCode::internal, "weighted normal form left a non-basis monomial");
      }
    }
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < n; ++i) comps.push_back(var(vars, i));
    for (const auto& [g, c] : reduction.combination) {
      const auto& [i, nu] = generators[static_cast<std::size_t>(g)];
      if (nu.degree() > N) continue;
      comps[i] -= Polynomial::monomial(vars, nu, c);
    }
    JetSubstitution step(vars, vars, std::move(comps), N);
    F = substitute_jet(F, step, N).without_jet_order();
    witness = compose(witness, step);
  }
  return detail::finish_normal_form(F, witness, w, N);
}

MarkedNormalForm reduce_to_simple(const Polynomial& f, const WeightVector& w,
                                  const ReductionOptions& options) {
  reject_degenerate(f);
  const int d0 = *weight(f, w);
  const Polynomial f0 = quasihomogeneous_part(f, w, d0);
  const bool e6_weights =
      f.arity() == 4 && w.for_variables(f.variables()) == std::vector<int>{4, 3, 2, 1};
  auto weights = w.for_variables(f.variables());
  std::string reason;
  try {
    for (const auto& m : graded_milnor_basis(f0, w)) {
      if (monomial_weight(m, weights) >= d0) {
        reason = "leading part has a Milnor basis monomial of weight >= " + std::to_string(d0);
        break;
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::non_isolated && e.code() != ErrorCode::smooth_point) throw;
    reason = std::string("leading part: ") + e.what();
  }
  if (!reason.empty()) {
    if (e6_weights) return reduce_to_e6_form(f, options);
    throw Error(ErrorCode::not_simple_leading_part, reason);
  }
  MarkedNormalForm out = weighted_normal_form(f, w, options);
  if (out.polynomial != f0.truncated(out.jet_order).without_jet_order()) {
    throw Error(ErrorCode::internal, "simple reduction did not reach the leading part");
  }
  return out;
}

}  // namespace divcon
