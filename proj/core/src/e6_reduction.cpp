#include <map>

#include "detail/series.hpp"
#include "detail/splitting.hpp"
#include "divcon/local_algebra.hpp"
#include "divcon/normal_form.hpp"
#include "divcon/weight_maps.hpp"

namespace divcon {

namespace {

constexpr std::size_t X = 0;
constexpr std::size_t Y = 1;
constexpr std::size_t Z = 2;
constexpr std::size_t T = 3;

Error not_e6(const std::string& why) {
  return Error(ErrorCode::not_simple_leading_part, "not an E6 germ of weight 6: " + why);
}

Monomial mono(int x, int y, int z, int t) { return Monomial{x, y, z, t}; }

// Iterates p <- step(p) from zero until it stops changing (modulo degree > N).
template <typename Step>
Polynomial fixed_point(const Polynomial& start, int N, Step step) {
  Polynomial p = start;
  for (int k = 0; k <= N + 1; ++k) {
    Polynomial next = step(p).truncated(N).without_jet_order();
    if (next == p) return p;
    p = std::move(next);
  }
  throw Error(ErrorCode::internal, "fixed-point iteration did not stabilize");
}

}  // namespace

MarkedNormalForm reduce_to_e6_form(const Polynomial& f, const ReductionOptions& options) {
  const auto& vars = f.variables();
  if (vars.size() != 4) throw not_e6("needs four variables");
  const WeightVector w(vars, {4, 3, 2, 1});
  const std::vector<int> weights{4, 3, 2, 1};
  if (weight(f, w) != 6) throw not_e6("weight under (4,3,2,1) is " + to_string(weight(f, w)));
  const int mu = milnor_data(f).milnor_number;
  if (mu != 6) throw not_e6("Milnor number is " + std::to_string(mu));
  const int N = options.jet_order ? *options.jet_order : mu + 1;

  Polynomial F = f.truncated(N).without_jet_order();
  JetSubstitution witness = JetSubstitution::identity(vars, N);
  auto apply = [&](const JetSubstitution& step) {
    F = substitute_jet(F, step, N).without_jet_order();
    witness = compose(witness, step);
  };
  auto v = [&](std::size_t i) { return Polynomial::variable(vars, vars[i]); };
  const Polynomial zero(vars);

  if (F.coefficient(mono(1, 0, 1, 0)) != 0) throw not_e6("x*z has a nonzero coefficient");
  const Rational beta = F.coefficient(mono(0, 2, 0, 0));
  if (beta == 0) throw not_e6("no y^2 term");
  const Rational b = F.coefficient(mono(1, 1, 0, 0));
  if (b != 0) {
    apply(JetSubstitution::from_images(vars, {{vars[Y], v(Y) - v(X) * (b / (beta * 2))}}, N));
  }
  const Rational alpha = F.coefficient(mono(2, 0, 0, 0));
  if (alpha == 0) throw not_e6("quadratic rank is below 2");

  detail::Reduction red = detail::split_block(F, weights, {Y}, N);
  F = red.polynomial;
  witness = compose(witness, red.witness);

  const Polynomial K = F - Polynomial::monomial(vars, mono(0, 2, 0, 0), beta);
  for (const auto& [m, c] : K.terms()) {
    if (m[Y] > 0) throw Error(ErrorCode::internal, "y survived the splitting step");
  }
  const Rational delta = K.coefficient(mono(1, 0, 0, 2));
  if (delta == 0) throw not_e6("x*t^2 has zero coefficient");
  if (K.coefficient(mono(1, 0, 1, 0)) != 0) throw not_e6("x*z has a nonzero coefficient");

  // Critical point x = xi(z, t) of K in x.
  const Polynomial R = K.derivative(X) - v(X) * (alpha * 2);
  const Polynomial xi = fixed_point(zero, N, [&](const Polynomial& p) {
    std::vector<Polynomial> images{p, zero, v(Z), v(T)};
    return compose_jet(R, images, N) * (-1 / (alpha * 2));
  });
  const std::vector<Polynomial> at_xi{xi, zero, v(Z), v(T)};
  const Polynomial H = compose_jet(K, at_xi, N).without_jet_order();
  const std::vector<Polynomial> shifted{v(X) + xi, zero, v(Z), v(T)};
  const Polynomial U =
      divide_by_variable_power(compose_jet(K, shifted, N).without_jet_order() - H, X, 2)
          .without_jet_order();

  const std::vector<std::string> zt{vars[Z], vars[T]};
  const Polynomial h = H.in_variables(zt);
  const Rational gamma = h.coefficient(Monomial{3, 0});
  const Rational eps = h.coefficient(Monomial{0, 4});
  if (gamma == 0) throw not_e6("no z^3 term after elimination");
  if (eps != -(delta * delta) / (alpha * 4)) {
    throw Error(ErrorCode::internal, "unexpected t^4 coefficient in the E6 reduction");
  }
  ReductionOptions inner;
  inner.jet_order = N;
  const MarkedNormalForm reduced = reduce_to_simple(h, WeightVector(zt, {4, 3}), inner);
  const Polynomial phi_z = reduced.witness.component(vars[Z]).in_variables(vars);
  const Polynomial phi_t = reduced.witness.component(vars[T]).in_variables(vars);

  // x = xi(phi) + x' * s with s^2 * U(x' s, phi) = alpha and x' = x + delta t^2 / (2 alpha).
  const Polynomial x_prime =
      v(X) + Polynomial::monomial(vars, mono(0, 0, 0, 2), delta / (alpha * 2));
  const Polynomial one = Polynomial::constant(vars, 1);
  const Polynomial s = fixed_point(one, N, [&](const Polynomial& p) {
    std::vector<Polynomial> images{multiply_truncated(x_prime, p, N), zero, phi_z, phi_t};
    Polynomial u = compose_jet(U, images, N).without_jet_order();
    return detail::series_sqrt(detail::series_reciprocal(u, N) * alpha, N);
  });
  const std::vector<Polynomial> at_phi{v(X), v(Y), phi_z, phi_t};
  Polynomial cx = compose_jet(xi, at_phi, N).without_jet_order() + multiply_truncated(x_prime, s, N);
  apply(JetSubstitution(vars, vars, {cx, v(Y), phi_z, phi_t}, N));

  Polynomial target(vars, {{mono(2, 0, 0, 0), alpha},
                           {mono(0, 2, 0, 0), beta},
                           {mono(0, 0, 3, 0), gamma},
                           {mono(1, 0, 0, 2), delta}});
  if (F != target) {
    throw Error(ErrorCode::internal, "E6 reduction did not reach the marked normal form");
  }
  return detail::finish_normal_form(F, witness, w, N);
}

}  // namespace divcon
