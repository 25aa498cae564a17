#include "divcon/weight_maps.hpp"

#include <algorithm>
#include <sstream>

#include "detail/linear_algebra.hpp"

namespace divcon {

namespace {

bool try_exact_inverse(const JetSubstitution& sigma, const std::vector<Polynomial>& theta, int N) {
  int deg_psi = 0;
  int deg_theta = 0;
  for (const auto& c : sigma.components()) deg_psi = std::max(deg_psi, c.degree());
  for (const auto& c : theta) deg_theta = std::max(deg_theta, c.degree());
  if (deg_psi * deg_theta > 64) return false;
  // One degree past N already decides most cases.
  for (std::size_t j = 0; j < sigma.target_variables().size(); ++j) {
    const Polynomial next = compose_jet(sigma.components()[j], theta, N + 1);
    if (next != Polynomial::variable(sigma.target_variables(), sigma.target_variables()[j])) {
      return false;
    }
  }
  for (std::size_t j = 0; j < sigma.target_variables().size(); ++j) {
    Polynomial back = compose_exact(sigma.components()[j], theta);
    if (back != Polynomial::variable(sigma.target_variables(), sigma.target_variables()[j])) {
      return false;
    }
  }
  for (std::size_t i = 0; i < theta.size(); ++i) {
    Polynomial back = compose_exact(theta[i], sigma.components());
    if (back != Polynomial::variable(sigma.source_variables(), sigma.source_variables()[i])) {
      return false;
    }
  }
  return true;
}

}  // namespace

JetSubstitution invert_jet(const JetSubstitution& sigma, int N) {
  const auto& src = sigma.source_variables();
  const auto& dst = sigma.target_variables();
  if (src.size() != dst.size()) {
    throw Error(ErrorCode::singular_linear_part, "only square substitutions are invertible");
  }
  if (!sigma.exact() && N > sigma.jet_order()) {
    throw Error(ErrorCode::precondition_violated,
                "inverse order exceeds the substitution jet order");
  }
  auto inv = detail::matrix_inverse(sigma.linear_part());
  if (!inv) throw Error(ErrorCode::singular_linear_part, "linear part is singular");
  const std::size_t n = src.size();

  // psi = L x + H(x); theta = L^{-1} (y - H(theta)).
  std::vector<Polynomial> higher;
  for (const auto& c : sigma.components()) {
    std::vector<Polynomial::Term> terms;
    const Polynomial jet = c.truncated(N);
    for (const auto& t : jet.terms()) {
      if (t.first.degree() >= 2) terms.push_back(t);
    }
    higher.emplace_back(src, std::move(terms));
  }
  auto apply_inverse = [&](const std::vector<Polynomial>& rhs) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial acc(dst);
      for (std::size_t j = 0; j < n; ++j) {
        if ((*inv)[i][j] != 0) acc += rhs[j] * (*inv)[i][j];
      }
      out.push_back(std::move(acc));
    }
    return out;
  };
  std::vector<Polynomial> ys;
  for (const auto& v : dst) ys.push_back(Polynomial::variable(dst, v));
  std::vector<Polynomial> theta = apply_inverse(ys);
  bool has_higher = std::any_of(higher.begin(), higher.end(),
                                [](const Polynomial& p) { return !p.is_zero(); });
  if (has_higher) {
    for (int k = 2; k <= N; ++k) {
      std::vector<Polynomial> rhs;
      for (std::size_t j = 0; j < n; ++j) rhs.push_back(ys[j] - compose_jet(higher[j], theta, k));
      theta = apply_inverse(rhs);
      for (auto& t : theta) t = t.truncated(k).without_jet_order();
    }
  }
  bool exact = sigma.exact() && try_exact_inverse(sigma, theta, N);
  return sigma.with_inverse(std::move(theta), N, exact);
}

JetSubstitution ensure_inverse(const JetSubstitution& sigma, int N) {
  if (sigma.has_inverse()) return sigma;
  int order = sigma.exact() ? N : std::min(N, sigma.jet_order());
  return invert_jet(sigma, order);
}

JetSubstitution compose(const JetSubstitution& first, const JetSubstitution& second) {
  if (first.source_variables() != second.target_variables()) {
    throw Error(ErrorCode::arity_mismatch, "composition variables do not line up");
  }
  const bool exact = first.exact() && second.exact();
  int order = std::max(first.jet_order(), second.jet_order());
  if (!first.exact()) order = std::min(order, first.jet_order());
  if (!second.exact()) order = std::min(order, second.jet_order());
  std::vector<Polynomial> comps;
  for (const auto& c : first.components()) {
    comps.push_back(exact ? compose_exact(c, second.components())
                          : compose_jet(c, second.components(), order));
  }
  JetSubstitution out(second.source_variables(), first.target_variables(), std::move(comps), order,
                      exact);
  if (first.has_inverse() && second.has_inverse()) {
    const bool inv_exact = first.inverse_exact() && second.inverse_exact();
    int inv_order = std::max(first.inverse_jet_order(), second.inverse_jet_order());
    if (!first.inverse_exact()) inv_order = std::min(inv_order, first.inverse_jet_order());
    if (!second.inverse_exact()) inv_order = std::min(inv_order, second.inverse_jet_order());
    std::vector<Polynomial> inv;
    for (const auto& c : second.inverse_components()) {
      inv.push_back(inv_exact ? compose_exact(c, first.inverse_components())
                              : compose_jet(c, first.inverse_components(), inv_order));
    }
    out = out.with_inverse(std::move(inv), inv_order, inv_exact);
  }
  return out;
}

std::string WeightCertificate::to_string() const {
  if (respecting) return "weight-respecting";
  std::ostringstream os;
  os << "not weight-respecting:";
  for (const auto& v : violations) {
    os << ' ' << (v.inverse_direction ? "inverse " : "") << v.variable << "-component has weight "
       << divcon::to_string(v.component_weight) << " < " << v.required << ';';
  }
  return os.str();
}

WeightCertificate verify_weight_respecting(const JetSubstitution& sigma,
                                           const WeightVector& w_src,
                                           const WeightVector& w_dst) {
  const int needed = std::max(w_src.max(), w_dst.max()) + 1;
  JetSubstitution s = sigma;
  if (!s.has_inverse()) {
    try {
      s = ensure_inverse(sigma, std::max(needed, sigma.exact() ? needed : sigma.jet_order()));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::singular_linear_part) {
        throw Error(ErrorCode::not_invertible, e.what());
      }
      throw;
    }
  }
  WeightCertificate cert;
  auto check = [&](const std::vector<Polynomial>& comps, const std::vector<std::string>& names,
                   const WeightVector& w_in, const WeightVector& w_out, bool inverse) {
    for (std::size_t j = 0; j < comps.size(); ++j) {
      Valuation v = weight(comps[j], w_in);
      int required = w_out.of(names[j]);
      if (v && *v < required) {
        cert.respecting = false;
        cert.violations.push_back({inverse, names[j], v, required});
      }
    }
  };
  check(s.components(), s.target_variables(), w_src, w_dst, false);
  check(s.inverse_components(), s.source_variables(), w_dst, w_src, true);
  return cert;
}

}  // namespace divcon
