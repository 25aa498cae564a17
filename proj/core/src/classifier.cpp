#include "divcon/classifier.hpp"

#include <map>

#include "detail/linear_algebra.hpp"
#include "detail/splitting.hpp"
#include "divcon/local_algebra.hpp"
#include "divcon/weight_maps.hpp"

namespace divcon {

bool SingularityTag::is_ade() const {
  switch (type) {
    case SingularityType::A:
    case SingularityType::D:
    case SingularityType::E6:
    case SingularityType::E7:
    case SingularityType::E8:
      return true;
    default:
      return false;
  }
}

std::string SingularityTag::to_string() const {
  switch (type) {
    case SingularityType::smooth: return "smooth";
    case SingularityType::A: return "A" + std::to_string(index);
    case SingularityType::D: return "D" + std::to_string(index);
    case SingularityType::E6: return "E6";
    case SingularityType::E7: return "E7";
    case SingularityType::E8: return "E8";
    case SingularityType::cA: return "cA" + std::to_string(index);
    case SingularityType::non_simple: return "non_simple";
    case SingularityType::unrecognized: return "unrecognized";
  }
  return "unrecognized";
}

namespace {

Polynomial var(const std::vector<std::string>& vars, std::size_t i) {
  return Polynomial::variable(vars, vars[i]);
}

bool has_linear_part(const Polynomial& f) {
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() == 1) return true;
    if (m.degree() > 1) break;
  }
  return false;
}

// x_i -> sum_j P[i][j] x_j.
JetSubstitution linear_change(const std::vector<std::string>& vars, const RationalMatrix& P,
                              int N) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    Polynomial c(vars);
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (P[i][j] != 0) c += var(vars, j) * P[i][j];
    }
    comps.push_back(std::move(c));
  }
  return JetSubstitution(vars, vars, std::move(comps), N, true);
}

struct RankSplit {
  Polynomial polynomial;
  JetSubstitution witness;
  std::size_t rank = 0;
  std::vector<std::string> residual_variables;
  Polynomial residual;
};

Polynomial strip_block(const Polynomial& F, std::size_t rank) {
  std::vector<Polynomial::Term> rest;
  for (const auto& t : F.terms()) {
    bool in_block = false;
    for (std::size_t i = 0; i < rank; ++i) in_block = in_block || t.first[i] > 0;
    if (!in_block) rest.push_back(t);
  }
  return Polynomial(F.variables(), std::move(rest));
}

// Diagonalizes the quadratic part and splits its nondegenerate variables off.
RankSplit split_rank(const Polynomial& f, int N) {
  const auto& vars = f.variables();
  auto cong = detail::diagonalize_symmetric(quadratic_form_matrix(f));
  std::size_t rank = 0;
  while (rank < cong.diagonal.size() && cong.diagonal[rank] != 0) ++rank;
  JetSubstitution lin = linear_change(vars, cong.transform, N);
  Polynomial F = substitute_jet(f.truncated(N).without_jet_order(), lin, N).without_jet_order();
  std::vector<std::size_t> block;
  for (std::size_t i = 0; i < rank; ++i) block.push_back(i);
  std::vector<int> ones(vars.size(), 1);
  RankSplit out;
  out.rank = rank;
  if (rank > 0) {
    auto red = detail::split_block(F, ones, block, N);
    out.polynomial = red.polynomial;
    out.witness = compose(lin, red.witness);
  } else {
    out.polynomial = F;
    out.witness = lin;
  }
  out.residual_variables.assign(vars.begin() + static_cast<long>(rank), vars.end());
  out.residual = strip_block(out.polynomial, rank).in_variables(out.residual_variables);
  return out;
}

struct BinaryCubic {
  Rational a, b, c, d;  // a u^3 + b u^2 v + c u v^2 + d v^3
};

BinaryCubic cubic_of(const Polynomial& h) {
  return {h.coefficient(Monomial{3, 0}), h.coefficient(Monomial{2, 1}),
          h.coefficient(Monomial{1, 2}), h.coefficient(Monomial{0, 3})};
}

Rational discriminant(const BinaryCubic& q) {
  const auto& [a, b, c, d] = q;
  return b * b * c * c - a * c * c * c * 4 - b * b * b * d * 4 - a * a * d * d * 27 +
         a * b * c * d * 18;
}

// Hessian covariant (b^2 - 3ac) u^2 + (bc - 9ad) u v + (c^2 - 3bd) v^2; it vanishes
// exactly for cubes of linear forms.
std::array<Rational, 3> hessian_covariant(const BinaryCubic& q) {
  const auto& [a, b, c, d] = q;
  return {b * b - a * c * 3, b * c - a * d * 9, c * c - b * d * 3};
}

// Matrix A with (l1, l2) = A (u, v), cubic = kappa * l1^2 * l2 (double root) or kappa * l1^3.
RationalMatrix cubic_frame(const BinaryCubic& q) {
  auto hc = hessian_covariant(q);
  if (hc[0] == 0 && hc[1] == 0 && hc[2] == 0) {
    if (q.a != 0) return {{Rational(1), q.b / (q.a * 3)}, {Rational(0), Rational(1)}};
    return {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  }
  Rational p, r;
  if (hc[0] != 0) {
    p = 1;
    r = hc[1] / (hc[0] * 2);
  } else {
    p = 0;
    r = 1;
  }
  const Rational& qv = r;  // l1 = p u + qv v
  Rational s1, s2;
  if (p != 0) {
    s1 = q.a / (p * p);
    s2 = (q.b - p * qv * s1 * 2) / (p * p);
  } else {
    s2 = q.d / (qv * qv);
    s1 = q.c / (qv * qv);
  }
  return {{p, qv}, {s1, s2}};
}

SingularityTag ade_tag(std::size_t corank, int mu, const std::optional<Polynomial>& residual) {
  if (corank == 0) return {SingularityType::A, 1};
  if (corank == 1) return {SingularityType::A, mu};
  if (corank >= 3) return {SingularityType::non_simple, 0};
  const Polynomial h3 = residual->homogeneous_part(3);
  if (h3.is_zero()) return {SingularityType::non_simple, 0};
  const BinaryCubic q = cubic_of(h3);
  if (discriminant(q) != 0) return {SingularityType::D, 4};
  auto hc = hessian_covariant(q);
  if (hc[0] != 0 || hc[1] != 0 || hc[2] != 0) return {SingularityType::D, mu};
  if (mu == 6) return {SingularityType::E6, 0};
  if (mu == 7) return {SingularityType::E7, 0};
  if (mu == 8) return {SingularityType::E8, 0};
  return {SingularityType::non_simple, 0};
}

// Weights (split block, u, v) making the normal form of the tag quasihomogeneous.
std::array<int, 3> normal_form_weights(const SingularityTag& tag) {
  switch (tag.type) {
    case SingularityType::A: return {tag.index + 1, 2, 2};
    case SingularityType::D: return {tag.index - 1, tag.index - 2, 2};
    case SingularityType::E6: return {6, 4, 3};
    case SingularityType::E7: return {9, 6, 4};
    case SingularityType::E8: return {15, 10, 6};
    default: return {1, 1, 1};
  }
}

std::optional<MarkedNormalForm> ade_witness(const Polynomial& f, const SingularityTag& tag,
                                            int N) {
  const auto& vars = f.variables();
  const std::size_t n = vars.size();
  RankSplit rs = split_rank(f, N);
  Polynomial F = rs.polynomial;
  JetSubstitution witness = rs.witness;
  const WeightVector ones = WeightVector::uniform(vars, 1);
  if (rs.rank == n) return detail::finish_normal_form(F, witness, ones, N);

  auto wts = normal_form_weights(tag);
  std::vector<int> weights(n, wts[0]);
  if (rs.rank + 1 == n) {
    weights[n - 1] = 2;
  } else {
    const std::size_t u = n - 2;
    const std::size_t v = n - 1;
    if (tag.type != SingularityType::D || tag.index != 4) {
      RationalMatrix A = cubic_frame(cubic_of(rs.residual.homogeneous_part(3)));
      auto inv = detail::matrix_inverse(A);
      if (!inv) return std::nullopt;
      RationalMatrix P = detail::identity_matrix(n);
      P[u][u] = (*inv)[0][0];
      P[u][v] = (*inv)[0][1];
      P[v][u] = (*inv)[1][0];
      P[v][v] = (*inv)[1][1];
      JetSubstitution lin = linear_change(vars, P, N);
      F = substitute_jet(F, lin, N).without_jet_order();
      witness = compose(witness, lin);
    }
    weights[u] = wts[1];
    weights[v] = wts[2];
  }
  ReductionOptions opts;
  opts.jet_order = N;
  MarkedNormalForm nf = reduce_to_simple(F, WeightVector(vars, weights), opts);
  witness = compose(witness, nf.witness);
  return detail::finish_normal_form(nf.polynomial, witness, ones, N);
}

void require_germ(const Polynomial& f) {
  if (f.constant_term() != 0 || has_linear_part(f)) {
    throw Error(ErrorCode::not_hypersurface_germ,
                "expected a singular germ: constant and linear parts must vanish");
  }
}

}  // namespace

SingularityReport classify_simple(const Polynomial& f, const ClassifyOptions& options) {
  if (f.arity() < 2) {
    throw Error(ErrorCode::precondition_violated, "classification needs at least two variables");
  }
  require_germ(f);
  const MilnorData md = milnor_data(f);
  SingularityReport report;
  report.multiplicity = multiplicity(f);
  report.quadratic_rank = quadratic_rank(f);
  report.corank = f.arity() - report.quadratic_rank;
  report.milnor_number = md.milnor_number;
  if (report.corank == 2) {
    report.residual = split_rank(f, md.milnor_number + 1).residual;
  }
  report.type = ade_tag(report.corank, md.milnor_number, report.residual);
  if (options.with_witness && report.type.is_ade()) {
    const int N = options.jet_order.value_or(md.milnor_number + 1);
    try {
      report.normal_form = ade_witness(f, report.type, N);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::not_simple_leading_part) throw;
    }
    if (report.normal_form) report.witness = report.normal_form->witness;
  }
  return report;
}

SingularityReport cA_index(const Polynomial& f) {
  if (f.arity() != 4) {
    throw Error(ErrorCode::precondition_violated, "compound-A index needs four variables");
  }
  SingularityReport report;
  report.multiplicity = multiplicity(f);
  report.quadratic_rank = quadratic_rank(f);
  report.corank = 4 - report.quadratic_rank;
  if (f.constant_term() == 0 && has_linear_part(f)) {
    report.type = {SingularityType::smooth, 0};
    return report;
  }
  require_germ(f);
  const MilnorData md = milnor_data(f);
  report.milnor_number = md.milnor_number;
  if (report.quadratic_rank < 2) {
    report.type = {SingularityType::unrecognized, 0};
    return report;
  }
  const int N = md.milnor_number + 1;
  const auto& vars = f.variables();
  const RationalMatrix M = quadratic_form_matrix(f);
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  for (std::size_t i = 0; i < 4 && !pair; ++i) {
    for (std::size_t j = i + 1; j < 4 && !pair; ++j) {
      if (M[i][i] * M[j][j] - M[i][j] * M[j][i] != 0) pair = std::make_pair(i, j);
    }
  }
  Polynomial F = f.truncated(N).without_jet_order();
  JetSubstitution witness = JetSubstitution::identity(vars, N);
  if (pair) {
    if (*pair != std::make_pair<std::size_t, std::size_t>(0, 1)) {
      std::vector<std::size_t> order{pair->first, pair->second};
      for (std::size_t k = 0; k < 4; ++k) {
        if (k != pair->first && k != pair->second) order.push_back(k);
      }
      RationalMatrix P(4, std::vector<Rational>(4, Rational(0)));
      for (std::size_t k = 0; k < 4; ++k) P[order[k]][k] = 1;
      JetSubstitution perm = linear_change(vars, P, N);
      F = substitute_jet(F, perm, N).without_jet_order();
      witness = compose(witness, perm);
    }
  } else {
    auto cong = detail::diagonalize_symmetric(M);
    JetSubstitution lin = linear_change(vars, cong.transform, N);
    F = substitute_jet(F, lin, N).without_jet_order();
    witness = compose(witness, lin);
  }
  auto red = detail::split_block(F, std::vector<int>(4, 1), {0, 1}, N);
  witness = compose(witness, red.witness);
  const std::vector<std::string> rest{vars[2], vars[3]};
  Polynomial g = strip_block(red.polynomial, 2).in_variables(rest);
  const Valuation m = multiplicity(g);
  if (!m || *m < 2) throw Error(ErrorCode::internal, "split residual has multiplicity below 2");
  report.type = {SingularityType::cA, *m - 1};
  report.cA_index = *m - 1;
  report.residual = g;
  report.witness = witness;
  return report;
}

bool is_simple(const Polynomial& f) {
  ClassifyOptions opts;
  opts.with_witness = false;
  return classify_simple(f, opts).type.is_ade();
}

SingularityReport classify(const Polynomial& f, const ClassifyOptions& options) {
  if (f.constant_term() == 0 && has_linear_part(f)) {
    SingularityReport report;
    report.multiplicity = multiplicity(f);
    report.quadratic_rank = quadratic_rank(f);
    report.corank = f.arity() - report.quadratic_rank;
    report.type = {SingularityType::smooth, 0};
    return report;
  }
  SingularityReport report = classify_simple(f, options);
  if (f.arity() == 4) {
    SingularityReport ca = cA_index(f);
    report.cA_index = ca.cA_index;
    if (ca.residual) report.residual = ca.residual;
  }
  return report;
}

}  // namespace divcon
