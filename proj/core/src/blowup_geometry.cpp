#include "divcon/blowup_geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "divcon/weight_maps.hpp"

namespace divcon {

namespace {

std::string fresh_parameter(const std::vector<std::string>& names) {
  std::string u = "u";
  while (std::find(names.begin(), names.end(), u) != names.end()) u += '_';
  return u;
}

std::string laurent_term(const Rational& c, const Monomial& m, int u_index,
                         const std::vector<std::string>& vars, int negative_order) {
  Monomial rest = m;
  rest.set(static_cast<std::size_t>(u_index), 0);
  std::string numerator = Polynomial::monomial(vars, rest, c).to_string();
  std::string out = numerator + "/" + vars[static_cast<std::size_t>(u_index)];
  if (negative_order > 1) out += "^" + std::to_string(negative_order);
  return out;
}

void check_chart_direction(const std::vector<Polynomial>& components,
                           const std::vector<std::string>& component_names,
                           const std::vector<int>& target_weights, const BlowupChart& chart,
                           bool inverse_direction, LiftCertificate& cert) {
  const std::size_t u_index =
      static_cast<std::size_t>(std::find(chart.variables.begin(), chart.variables.end(),
                                         chart.parameter) -
                               chart.variables.begin());
  for (std::size_t k = 0; k < components.size(); ++k) {
    Polynomial lifted = compose_exact(components[k], chart.substitution);
    for (const auto& [m, c] : lifted.terms()) {
      if (m[u_index] < target_weights[k]) {
        cert.obstructions.push_back(
            {chart.chart_variable, inverse_direction, component_names[k],
             laurent_term(c, m, static_cast<int>(u_index), chart.variables,
                          target_weights[k] - m[u_index])});
        break;
      }
    }
  }
}

}  // namespace

std::vector<BlowupChart> charts(const WeightVector& w) {
  if (w.size() == 0) throw Error(ErrorCode::precondition_violated, "blowup needs a variable");
  const auto& names = w.names();
  const std::string u = fresh_parameter(names);
  std::vector<BlowupChart> out;
  for (std::size_t j = 0; j < names.size(); ++j) {
    BlowupChart chart;
    chart.chart_variable = names[j];
    chart.parameter = u;
    chart.variables = names;
    chart.variables[j] = u;
    chart.quotient_order = w.values()[j];
    const Polynomial up = Polynomial::variable(chart.variables, u);
    for (std::size_t i = 0; i < names.size(); ++i) {
      Polynomial image = up.pow(static_cast<unsigned>(w.values()[i]));
      if (i != j) image *= Polynomial::variable(chart.variables, names[i]);
      chart.substitution.push_back(std::move(image));
    }
    chart.exceptional = up;
    out.push_back(std::move(chart));
  }
  return out;
}

BlowupChart strict_transform(const Polynomial& f, const WeightVector& w, const BlowupChart& chart) {
  const Polynomial g = f.without_jet_order().in_variables(w.names());
  const Valuation d = weight(g, w);
  BlowupChart out = chart;
  if (!d) {
    out.transform = Polynomial(chart.variables);
    return out;
  }
  const Polynomial pulled = compose_exact(g, chart.substitution);
  const std::size_t u_index = static_cast<std::size_t>(
      std::find(chart.variables.begin(), chart.variables.end(), chart.parameter) -
      chart.variables.begin());
  Polynomial transform = divide_by_variable_power(pulled, u_index, *d);
  bool coprime = false;
  for (const auto& t : transform.terms()) coprime = coprime || t.first[u_index] == 0;
  if (!coprime) throw Error(ErrorCode::internal, "strict transform divisible by the parameter");
  out.transform = std::move(transform);
  return out;
}

int discrepancy(const WeightVector& w, const Germ& germ) {
  if (std::holds_alternative<SmoothAmbient>(germ)) {
    if (w.size() != 3) {
      throw Error(ErrorCode::unsupported_shape, "smooth centre needs three weights");
    }
    return w.sum() - 1;
  }
  const Polynomial& f = std::get<Polynomial>(germ);
  if (f.arity() != 4 || w.size() != 4) {
    throw Error(ErrorCode::unsupported_shape, "hypersurface centre needs four variables");
  }
  const Valuation d = weight(f, w);
  if (!d) throw Error(ErrorCode::unsupported_shape, "weight of the zero polynomial");
  return w.sum() - *d - 1;
}

std::string LiftCertificate::to_string() const {
  std::ostringstream os;
  os << (lifts ? "lifts" : "does not lift");
  if (weight_respecting) os << " (weight-respecting)";
  for (const auto& o : obstructions) {
    os << "\n  chart " << o.chart_variable << (o.inverse_direction ? ", inverse" : "")
       << ", component " << o.component << ": " << o.term;
  }
  return os.str();
}

LiftCertificate chart_regularity(const JetSubstitution& sigma, const WeightVector& w) {
  const JetSubstitution s = ensure_inverse(sigma, sigma.jet_order());
  const std::vector<int> w_src = w.for_variables(s.source_variables());
  const std::vector<int> w_dst = w.for_variables(s.target_variables());
  LiftCertificate cert;
  const WeightVector src(s.source_variables(), w_src);
  const WeightVector dst(s.target_variables(), w_dst);
  for (const auto& chart : charts(src)) {
    if (chart.quotient_order != 1) continue;
    check_chart_direction(s.components(), s.target_variables(), w_dst, chart, false, cert);
  }
  for (const auto& chart : charts(dst)) {
    if (chart.quotient_order != 1) continue;
    check_chart_direction(s.inverse_components(), s.source_variables(), w_src, chart, true,
                          cert);
  }
  cert.lifts = cert.obstructions.empty();
  return cert;
}

LiftCertificate lift_check(const JetSubstitution& sigma, const WeightVector& w, const Germ& germ) {
  (void)germ;
  const std::vector<int> w_src = w.for_variables(sigma.source_variables());
  const std::vector<int> w_dst = w.for_variables(sigma.target_variables());
  if (std::find(w_src.begin(), w_src.end(), 1) == w_src.end()) {
    throw Error(ErrorCode::precondition_violated, "lift check needs a weight-1 chart");
  }
  const WeightCertificate wc =
      verify_weight_respecting(sigma, WeightVector(sigma.source_variables(), w_src),
                               WeightVector(sigma.target_variables(), w_dst));
  if (wc.respecting) {
    LiftCertificate cert;
    cert.lifts = true;
    cert.weight_respecting = true;
    return cert;
  }
  return chart_regularity(sigma, w);
}

AlgebraizedGraph algebraize(const std::vector<Polynomial>& ideal, const JetSubstitution& psi,
                            const std::vector<int>& w_y) {
  const auto& xs = psi.source_variables();
  const auto& ys = psi.target_variables();
  std::vector<std::string> all = xs;
  for (const auto& y : ys) {
    if (std::find(xs.begin(), xs.end(), y) != xs.end()) {
      throw Error(ErrorCode::precondition_violated, "variable " + y + " occurs on both sides");
    }
    all.push_back(y);
  }
  if (w_y.size() != ys.size()) {
    throw Error(ErrorCode::arity_mismatch, "one weight per target variable expected");
  }
  const std::vector<int>& wy = w_y;
  for (std::size_t j = 0; j < ys.size(); ++j) {
    if (wy[j] <= 0) throw Error(ErrorCode::zero_weight, "nonpositive weight on " + ys[j]);
  }
  std::vector<int> weights(xs.size(), 1);
  weights.insert(weights.end(), wy.begin(), wy.end());
  AlgebraizedGraph out;
  out.weights = WeightVector(all, weights);
  for (const auto& g : ideal) out.generators.push_back(g.without_jet_order().in_variables(all));
  for (std::size_t j = 0; j < ys.size(); ++j) {
    if (!psi.exact() && wy[j] - 1 > psi.jet_order()) {
      throw Error(ErrorCode::bound_violated,
                  "component " + ys[j] + " is only known up to degree " +
                      std::to_string(psi.jet_order()));
    }
    Polynomial low = psi.components()[j].truncated(wy[j] - 1).without_jet_order().in_variables(all);
    out.generators.push_back(low - Polynomial::variable(all, ys[j]));
  }
  return out;
}

}  // namespace divcon
