#include "divcon/contraction_atlas.hpp"

#include <algorithm>
#include <numeric>

#include "divcon/local_algebra.hpp"
#include "divcon/weight_maps.hpp"

namespace divcon {

std::string to_string(ContractionKind kind) {
  switch (kind) {
    case ContractionKind::smooth: return "smooth";
    case ContractionKind::type1: return "type1";
    case ContractionKind::type2: return "type2";
    case ContractionKind::type3: return "type3";
  }
  return "unknown";
}

std::string Cardinality::to_string() const {
  switch (kind) {
    case Kind::finite: return std::to_string(value);
    case Kind::countably_infinite: return "countably infinite";
    case Kind::uncountable: return "uncountable";
  }
  return "";
}

namespace {

bool has_linear_part(const Polynomial& f) {
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() == 1) return true;
    if (m.degree() > 1) break;
  }
  return false;
}

Polynomial var(const std::vector<std::string>& vars, std::size_t i) {
  return Polynomial::variable(vars, vars[i]);
}

Rational factorial(int k) {
  Rational out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

// Linear change bringing a tangent cone c * l^{n+1} to c * z^{n+1}; nullopt
// when the cone is not a power of a linear form.
std::optional<std::vector<Polynomial>> power_frame(const Polynomial& cone, int n) {
  const auto& vars = cone.variables();
  const Polynomial z = var(vars, 0);
  const Polynomial t = var(vars, 1);
  const Rational c = cone.coefficient(Monomial{n + 1, 0});
  if (c != 0) {
    const Rational s = cone.coefficient(Monomial{n, 1}) / (c * (n + 1));
    if (cone != c * (z + t * s).pow(static_cast<unsigned>(n + 1))) return std::nullopt;
    return std::vector<Polynomial>{z - t * s, t};
  }
  const Rational d = cone.coefficient(Monomial{0, n + 1});
  if (d == 0 || cone != d * t.pow(static_cast<unsigned>(n + 1))) return std::nullopt;
  return std::vector<Polynomial>{t, z};
}

// g(z + phi(t), t) with d^n g / dz^n (phi(t), t) = 0, for g with tangent cone c z^{n+1}.
Polynomial tschirnhaus(const Polynomial& g, int n, int N) {
  const auto& vars = g.variables();
  Polynomial D = g;
  for (int i = 0; i < n; ++i) D = D.derivative(0);
  const Rational kappa = g.coefficient(Monomial{n + 1, 0}) * factorial(n + 1);
  Polynomial phi(vars);
  const Polynomial t = var(vars, 1);
  for (int round = 0; round <= N + 1; ++round) {
    std::vector<Polynomial> images{phi, t};
    Polynomial r = compose_jet(D, images, N).without_jet_order();
    if (r.is_zero()) break;
    phi -= r * (Rational(1) / kappa);
  }
  std::vector<Polynomial> images{var(vars, 0) + phi, t};
  return compose_jet(g, images, N).without_jet_order();
}

struct ResidualData {
  int n = 0;
  int mu = 0;
  Polynomial tschirnhaus_form;
  bool power_cone = false;
};

ResidualData prepare_residual(const Polynomial& g, int n) {
  if (g.arity() != 2) {
    throw Error(ErrorCode::precondition_violated, "residual must be a germ in two variables");
  }
  const Valuation m = multiplicity(g);
  if (!m || *m != n + 1) {
    throw Error(ErrorCode::multiplicity_mismatch,
                "residual has multiplicity " + to_string(m) + ", expected " +
                    std::to_string(n + 1));
  }
  ResidualData out;
  out.n = n;
  out.mu = milnor_data(g).milnor_number;
  const int N = out.mu + 1;
  Polynomial G = g.truncated(N).without_jet_order();
  auto frame = power_frame(G.homogeneous_part(n + 1), n);
  if (!frame) {
    out.tschirnhaus_form = G;
    return out;
  }
  out.power_cone = true;
  G = compose_jet(G, *frame, N).without_jet_order();
  out.tschirnhaus_form = tschirnhaus(G, n, N);
  return out;
}

AdmissibleSystems systems_for(const ResidualData& r, const AtlasOptions& options) {
  AdmissibleSystems out;
  out.representative = r.tschirnhaus_form;
  const int n = r.n;
  int bound = 0;
  while (n * ((n + 1) * (bound + 1) - 1) <= r.mu + 1) ++bound;
  if (options.max_a) bound = std::min(bound, *options.max_a);
  out.a_bound = bound;
  const auto& vars = r.tschirnhaus_form.variables();
  for (int a = 1; a <= bound; ++a) {
    if (a > 1 && !r.power_cone) break;
    const Valuation d = weight(r.tschirnhaus_form, WeightVector(vars, {a, 1}));
    if (!d || *d != a * (n + 1)) continue;
    out.a_max = a;
    const int total = a * (n + 1);
    for (int r1 = 1; 2 * r1 <= total; ++r1) {
      if (std::gcd(a, r1) == 1) out.systems.push_back({r1, total - r1, a});
    }
  }
  std::sort(out.systems.begin(), out.systems.end());
  return out;
}

Polynomial type1_representative(const std::vector<std::string>& vars, const Polynomial& g) {
  return var(vars, 0) * var(vars, 1) + g.in_variables(vars);
}

Polynomial type2_representative(const std::vector<std::string>& vars) {
  return var(vars, 0) * var(vars, 1) + var(vars, 2).pow(2) + var(vars, 3).pow(3);
}

Polynomial type3_representative(const std::vector<std::string>& vars) {
  return var(vars, 0).pow(2) + var(vars, 1).pow(2) + var(vars, 2).pow(3) +
         var(vars, 0) * var(vars, 3).pow(2);
}

ContractionClass make_class(ContractionKind kind, const WeightVector& w, const Polynomial& rep,
                            int n) {
  ContractionClass c;
  c.kind = kind;
  c.weights = w;
  c.cA_index = n;
  c.representative = rep;
  c.discrepancy = discrepancy(w, rep);
  return c;
}

ContractionClass type1_class(const std::vector<std::string>& vars, const WeightSystem& s,
                             const Polynomial& g, int n) {
  ContractionClass c = make_class(ContractionKind::type1, WeightVector(vars, {s.r1, s.r2, s.a, 1}),
                                  type1_representative(vars, g), n);
  c.r1 = s.r1;
  c.r2 = s.r2;
  c.a = s.a;
  return c;
}

ContractionClass smooth_class(const WeightVector& w, int a, int b) {
  ContractionClass c;
  c.kind = ContractionKind::smooth;
  c.weights = w;
  c.a = a;
  c.b = b;
  c.discrepancy = discrepancy(w, SmoothAmbient{w.names()});
  return c;
}

ContractionCensus smooth_census() {
  ContractionCensus census;
  census.family = "(1,a,b)-blowups with 1 <= a <= b and gcd(a,b) = 1";
  census.count_local_analytic = {Cardinality::Kind::countably_infinite, 0};
  census.count_over_base = {Cardinality::Kind::uncountable, 0};
  census.singularity = {SingularityType::smooth, 0};
  return census;
}

}  // namespace

AdmissibleSystems admissible_weight_systems(const Polynomial& g, int n,
                                            const AtlasOptions& options) {
  if (n < 1) throw Error(ErrorCode::precondition_violated, "n must be positive");
  return systems_for(prepare_residual(g, n), options);
}

ContractionCensus enumerate_contractions(const Germ& germ, const AtlasOptions& options) {
  if (std::holds_alternative<SmoothAmbient>(germ)) return smooth_census();
  const Polynomial& f = std::get<Polynomial>(germ);
  if (f.constant_term() == 0 && has_linear_part(f)) return smooth_census();
  if (f.arity() != 4) {
    throw Error(ErrorCode::unsupported_germ, "expected a germ in four variables");
  }
  const SingularityReport ca = cA_index(f);
  if (ca.type.type != SingularityType::cA) {
    throw Error(ErrorCode::unsupported_germ,
                "germ is not compound A (quadratic rank " + std::to_string(ca.quadratic_rank) + ")");
  }
  const int n = *ca.cA_index;
  ClassifyOptions copts;
  copts.with_witness = false;
  const SingularityTag tag = classify_simple(f, copts).type;

  const ResidualData residual = prepare_residual(*ca.residual, n);
  const AdmissibleSystems adm = systems_for(residual, options);
  const auto& vars = f.variables();

  ContractionCensus census;
  census.cA_index = n;
  census.singularity = tag;
  census.a_max = adm.a_max;
  for (const auto& s : adm.systems) {
    census.classes.push_back(type1_class(vars, s, residual.tschirnhaus_form, n));
  }
  if (tag == SingularityTag{SingularityType::A, 2} && n == 1) {
    census.classes.push_back(make_class(ContractionKind::type2,
                                        WeightVector(vars, {1, 5, 3, 2}),
                                        type2_representative(vars), n));
  }
  if (tag.type == SingularityType::E6 && n == 2) {
    census.classes.push_back(make_class(ContractionKind::type3,
                                        WeightVector(vars, {4, 3, 2, 1}),
                                        type3_representative(vars), n));
  }
  census.count_local_analytic = {Cardinality::Kind::finite,
                                 static_cast<long>(census.classes.size())};
  const bool large = std::any_of(census.classes.begin(), census.classes.end(),
                                 [](const ContractionClass& c) { return c.discrepancy >= 2; });
  census.count_over_base = large ? Cardinality{Cardinality::Kind::uncountable, 0}
                                 : Cardinality{Cardinality::Kind::finite, n};
  return census;
}

namespace {

struct Attempt {
  MembershipAttempt record;
  std::optional<ContractionClass> match;
};

Attempt fail(ContractionKind kind, bool shape, std::string why) {
  return {{kind, shape, std::move(why)}, std::nullopt};
}

std::string ne(const std::string& what, long have, long want) {
  return what + " " + std::to_string(have) + " ≠ " + std::to_string(want);
}

Attempt try_smooth(const Germ& germ, const WeightVector& w) {
  const auto kind = ContractionKind::smooth;
  if (!std::holds_alternative<SmoothAmbient>(germ)) {
    return fail(kind, false, "centre is a hypersurface germ, not the smooth 3-fold");
  }
  const auto& vars = std::get<SmoothAmbient>(germ).variables;
  if (vars.size() != 3) return fail(kind, false, "smooth centre needs three coordinates");
  std::vector<int> v = w.for_variables(vars);
  WeightVector wv(vars, v);
  std::sort(v.begin(), v.end());
  if (v[0] != 1) return fail(kind, true, "weights are not of the form (1,a,b)");
  if (std::gcd(v[1], v[2]) != 1) {
    return fail(kind, true,
                "gcd(a,b) = " + std::to_string(std::gcd(v[1], v[2])) + " for (a,b) = (" +
                    std::to_string(v[1]) + "," + std::to_string(v[2]) + ")");
  }
  return {{kind, true, ""}, smooth_class(wv, v[1], v[2])};
}

struct PolynomialFacts {
  std::optional<SingularityReport> ca;
  std::optional<SingularityTag> tag;
};

Attempt try_type1(const Polynomial& f, const std::vector<int>& w, PolynomialFacts& facts) {
  const auto kind = ContractionKind::type1;
  if (w[3] != 1) return fail(kind, false, ne("weight of " + f.variables()[3] + " is", w[3], 1));
  const int r1 = std::min(w[0], w[1]);
  const int r2 = std::max(w[0], w[1]);
  const int a = w[2];
  if ((r1 + r2) % a != 0) {
    return fail(kind, true,
                "a = " + std::to_string(a) + " does not divide r1 + r2 = " + std::to_string(r1 + r2));
  }
  if (std::gcd(a, r1) != 1 || std::gcd(a, r2) != 1) {
    return fail(kind, true, "a = " + std::to_string(a) + " is not coprime to both r1 and r2");
  }
  if (!facts.ca) facts.ca = cA_index(f);
  if (facts.ca->type.type != SingularityType::cA) {
    return fail(kind, true, "germ is not compound A");
  }
  const int n = *facts.ca->cA_index;
  if (a * (n + 1) != r1 + r2) return fail(kind, true, ne("a(n+1) =", a * (n + 1), r1 + r2));
  const Valuation d = weight(f, WeightVector(f.variables(), w));
  if (!d || *d != r1 + r2) {
    return fail(kind, true, "weight " + to_string(d) + " ≠ " + std::to_string(r1 + r2));
  }
  const ResidualData residual = prepare_residual(*facts.ca->residual, n);
  ContractionClass c = type1_class(f.variables(), {r1, r2, a}, residual.tschirnhaus_form, n);
  c.weights = WeightVector(f.variables(), w);
  c.discrepancy = discrepancy(c.weights, f);
  return {{kind, true, ""}, c};
}

SingularityTag simple_tag(const Polynomial& f, PolynomialFacts& facts) {
  if (!facts.tag) {
    ClassifyOptions opts;
    opts.with_witness = false;
    facts.tag = classify_simple(f, opts).type;
  }
  return *facts.tag;
}

Attempt try_special(const Polynomial& f, const std::vector<int>& w, PolynomialFacts& facts,
                    ContractionKind kind) {
  const bool type2 = kind == ContractionKind::type2;
  const bool shape = type2 ? (w == std::vector<int>{1, 5, 3, 2} || w == std::vector<int>{5, 1, 3, 2})
                           : w == std::vector<int>{4, 3, 2, 1};
  const std::string want_shape = type2 ? "(1,5,3,2)" : "(4,3,2,1)";
  if (!shape) return fail(kind, false, "weights differ from " + want_shape);
  const SingularityTag want = type2 ? SingularityTag{SingularityType::A, 2}
                                    : SingularityTag{SingularityType::E6, 0};
  const SingularityTag tag = simple_tag(f, facts);
  if (tag != want) return fail(kind, true, "singularity is " + tag.to_string() + ", not " + want.to_string());
  const WeightVector wv(f.variables(), w);
  const Valuation d = weight(f, wv);
  if (!d || *d != 6) return fail(kind, true, "weight " + to_string(d) + " ≠ 6");
  const auto& vars = f.variables();
  ContractionClass c = make_class(kind, wv,
                                  type2 ? type2_representative(vars) : type3_representative(vars),
                                  type2 ? 1 : 2);
  c.discrepancy = discrepancy(wv, f);
  return {{kind, true, ""}, c};
}

}  // namespace

Membership decide_membership(const Germ& germ, const WeightVector& w) {
  Membership out;
  std::vector<Attempt> attempts;
  attempts.push_back(try_smooth(germ, w));
  if (std::holds_alternative<Polynomial>(germ) && !attempts.back().match) {
    const Polynomial& f = std::get<Polynomial>(germ);
    const std::vector<int> wf = w.for_variables(f.variables());
    if (f.constant_term() == 0 && has_linear_part(f)) {
      attempts.back().record.failure =
          "smooth hypersurface germ; smooth centres take the ambient 3-fold with three weights";
    } else if (f.arity() != 4) {
      throw Error(ErrorCode::unsupported_germ, "expected a germ in four variables");
    } else {
      PolynomialFacts facts;
      attempts.push_back(try_type1(f, wf, facts));
      if (!attempts.back().match) attempts.push_back(try_special(f, wf, facts, ContractionKind::type2));
      if (!attempts.back().match) attempts.push_back(try_special(f, wf, facts, ContractionKind::type3));
    }
  }
  for (const auto& a : attempts) out.attempts.push_back(a.record);
  if (attempts.back().match) {
    out.match = attempts.back().match;
    return out;
  }
  out.reason = "weights match no class shape";
  for (const auto& a : attempts) {
    if (a.record.shape_matched) out.reason = a.record.failure;
  }
  if (std::none_of(attempts.begin(), attempts.end(),
                   [](const Attempt& a) { return a.record.shape_matched; }) &&
      std::holds_alternative<Polynomial>(germ) && has_linear_part(std::get<Polynomial>(germ))) {
    out.reason = attempts.front().record.failure;
  }
  return out;
}

namespace {

JetSubstitution phi_c(const ContractionClass& cls, const Rational& c) {
  const Polynomial& rep = *cls.representative;
  const auto& vars = rep.variables();
  const Polynomial x = var(vars, 0);
  const Polynomial y = var(vars, 1);
  const Polynomial z = var(vars, 2);
  const Polynomial t = var(vars, 3);
  const Polynomial g = rep - x * y;
  auto build = [&](const Rational& s) {
    std::vector<Polynomial> images{x, y, z + x * s, t};
    Polynomial diff = compose_exact(g, images) - g;
    Polynomial q = divide_by_variable_power(diff, 0, 1);
    return std::vector<Polynomial>{x, y - q, z + x * s, t};
  };
  JetSubstitution sigma(vars, vars, build(c), std::max(rep.degree(), 1), true);
  const int order = std::max(rep.degree(), 1);
  return sigma.with_inverse(build(-c), order, true);
}

JetSubstitution psi_uvw(const ContractionClass& cls, const Rational& u, const Rational& v,
                        const Rational& w) {
  const Polynomial& rep = *cls.representative;
  const auto& vars = rep.variables();
  const Polynomial x = var(vars, 0);
  const Polynomial y = var(vars, 1);
  const Polynomial z = var(vars, 2);
  const Polynomial t = var(vars, 3);
  const Rational half(1, 2);
  auto build = [&](const Rational& uu, const Rational& vv, const Rational& ww) {
    return std::vector<Polynomial>{x * vv + y * ww + t.pow(2) * ((vv - 1) * half),
                                   x * (uu * ww) - y * (uu * vv) + t.pow(2) * (uu * ww * half), z,
                                   t};
  };
  JetSubstitution sigma(vars, vars, build(u, v, w), 2, true);
  return sigma.with_inverse(build(u, v, u * w), 2, true);
}

void verify_fixes(const JetSubstitution& sigma, const Polynomial& rep) {
  const Polynomial image = compose_exact(rep, sigma.components());
  if (image != rep) {
    throw Error(ErrorCode::internal, "automorphism does not fix the representative");
  }
  const auto& inv = sigma.inverse_components();
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const Polynomial back = compose_exact(sigma.components()[i], inv);
    if (back != var(rep.variables(), i)) {
      throw Error(ErrorCode::internal, "automorphism inverse is wrong");
    }
  }
}

}  // namespace

JetSubstitution family_witness(const ContractionClass& cls, const std::vector<Rational>& params) {
  if (!cls.representative) {
    throw Error(ErrorCode::precondition_violated, "class has no representative");
  }
  JetSubstitution sigma;
  if (cls.kind == ContractionKind::type1) {
    if (cls.r1 != 1 || cls.a < 2) {
      throw Error(ErrorCode::precondition_violated, "Phi_c needs r1 = 1 and a >= 2");
    }
    if (params.size() != 1) throw Error(ErrorCode::parameter_constraint, "Phi_c takes one parameter c");
    sigma = phi_c(cls, params[0]);
  } else if (cls.kind == ContractionKind::type3) {
    if (params.size() != 3) {
      throw Error(ErrorCode::parameter_constraint, "Psi takes three parameters (u, v, w)");
    }
    const Rational &u = params[0], &v = params[1], &w = params[2];
    if (u != 1 && u != -1) throw Error(ErrorCode::parameter_constraint, "u must be 1 or -1");
    if (v * v + w * w != 1) {
      throw Error(ErrorCode::parameter_constraint,
                  "v^2 + w^2 = " + to_string(Rational(v * v + w * w)) + " ≠ 1");
    }
    sigma = psi_uvw(cls, u, v, w);
  } else {
    throw Error(ErrorCode::precondition_violated,
                "no automorphism family for " + to_string(cls.kind) + " classes");
  }
  verify_fixes(sigma, *cls.representative);
  return sigma;
}

}  // namespace divcon
