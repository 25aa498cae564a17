#include "divcon/local_algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>

#include "detail/linear_algebra.hpp"

namespace divcon {

namespace {

struct JetSystem {
  std::vector<Monomial> monomials;
  detail::Echelon echelon;
};

// Span of m^a * df/dx_i inside the polynomials of degree <= k.
JetSystem jacobian_system(const Polynomial& f, int k) {
  JetSystem sys;
  const std::size_t n = f.arity();
  sys.monomials = monomials_up_to_degree(n, k);
  std::unordered_map<Monomial, int, MonomialHash> column;
  column.reserve(sys.monomials.size());
  for (std::size_t i = 0; i < sys.monomials.size(); ++i) {
    column.emplace(sys.monomials[i], static_cast<int>(i));
  }
  for (const auto& g : jacobian_generators(f.without_jet_order())) {
    Polynomial jet = g.truncated(k);
    if (jet.is_zero()) continue;
    const int low = jet.terms().front().first.degree();
    for (const auto& nu : sys.monomials) {
      if (nu.degree() + low > k) break;
      detail::SparseRow row;
      for (const auto& [m, c] : jet.terms()) {
        if (m.degree() + nu.degree() > k) break;
        row.emplace_back(column.at(m * nu), c);
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first > b.first; });
      sys.echelon.insert(std::move(row));
    }
  }
  return sys;
}

}  // namespace

int milnor_number_at_order(const Polynomial& f, int k) {
  JetSystem sys = jacobian_system(f, k);
  return static_cast<int>(sys.monomials.size() - sys.echelon.rank());
}

namespace {

constexpr std::uint64_t kMonomialBudget = 40000;

std::uint64_t monomial_count(std::size_t n, int k) {
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    c = c * (static_cast<std::uint64_t>(k) + i) / i;
  }
  return c;
}

bool is_stable(const JetSystem& sys, int k) {
  for (std::size_t i = 0; i < sys.monomials.size(); ++i) {
    if (sys.monomials[i].degree() != k) continue;
    if (!sys.echelon.contains({{static_cast<int>(i), Rational(1)}})) return false;
  }
  return true;
}

}  // namespace

MilnorData milnor_data(const Polynomial& f, const MilnorOptions& options) {
  const std::size_t n = f.arity();
  int cap = options.cap;
  while (cap > 1 && monomial_count(n, cap) > kMonomialBudget) --cap;
  // Stability at k persists for all larger k, so search by doubling and bisection.
  int lo = 0;
  int hi = 1;
  std::optional<JetSystem> found;
  while (true) {
    JetSystem sys = jacobian_system(f, hi);
    if (is_stable(sys, hi)) {
      found = std::move(sys);
      break;
    }
    if (hi == cap) {
      throw Error(ErrorCode::non_isolated,
                  "no power of the maximal ideal lies in the Jacobian ideal up to degree " +
                      std::to_string(cap) + " (non-isolated singularity)");
    }
    lo = hi;
    hi = std::min(2 * hi, cap);
  }
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    JetSystem sys = jacobian_system(f, mid);
    if (is_stable(sys, mid)) {
      hi = mid;
      found = std::move(sys);
    } else {
      lo = mid;
    }
  }
  MilnorData data;
  data.stabilization_order = hi;
  for (std::size_t i = 0; i < found->monomials.size(); ++i) {
    if (!found->echelon.is_pivot(static_cast<int>(i))) data.basis.push_back(found->monomials[i]);
  }
  data.milnor_number = static_cast<int>(data.basis.size());
  if (data.milnor_number == 0) {
    throw Error(ErrorCode::smooth_point, "the Jacobian ideal is the unit ideal (smooth point)");
  }
  return data;
}

std::vector<Monomial> graded_milnor_basis(const Polynomial& f0, const WeightVector& w) {
  const auto& vars = f0.variables();
  const std::vector<int> weights = w.for_variables(vars);
  const Valuation d0 = weight(f0, w);
  if (!d0 || quasihomogeneous_part(f0, w, *d0) != f0.without_jet_order()) {
    throw Error(ErrorCode::precondition_violated, "polynomial is not quasihomogeneous");
  }
  int socle = 0;
  for (int wi : weights) socle += *d0 - 2 * wi;
  const int top = socle + *std::max_element(weights.begin(), weights.end());
  const std::vector<Polynomial> grad = jacobian_generators(f0.without_jet_order());
  std::vector<Monomial> basis;
  for (int d = 0; d <= top; ++d) {
    const std::vector<Monomial> columns = monomials_of_weight(weights, d);
    std::unordered_map<Monomial, int, MonomialHash> column;
    for (std::size_t i = 0; i < columns.size(); ++i) column.emplace(columns[i], static_cast<int>(i));
    detail::Echelon echelon;
    for (std::size_t i = 0; i < grad.size(); ++i) {
      const int shift = d - *d0 + weights[i];
      if (grad[i].is_zero() || shift < 0) continue;
      for (const auto& nu : monomials_of_weight(weights, shift)) {
        detail::SparseRow row;
        for (const auto& [m, c] : grad[i].terms()) row.emplace_back(column.at(m * nu), c);
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        echelon.insert(std::move(row));
      }
    }
    if (d > socle) {
      if (echelon.rank() != columns.size()) {
        throw Error(ErrorCode::non_isolated, "quasihomogeneous polynomial with non-isolated singularity");
      }
      continue;
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (!echelon.is_pivot(static_cast<int>(i))) basis.push_back(columns[i]);
    }
  }
  if (basis.empty()) throw Error(ErrorCode::smooth_point, "quasihomogeneous polynomial is smooth");
  std::sort(basis.begin(), basis.end());
  return basis;
}

Polynomial determinacy_truncate(const Polynomial& f, int N) {
  const int mu = milnor_data(f).milnor_number;
  if (N <= mu) {
    throw Error(ErrorCode::bound_violated, "truncation degree " + std::to_string(N) +
                                               " must exceed the Milnor number " +
                                               std::to_string(mu));
  }
  return f.truncated(N).without_jet_order();
}

}  // namespace divcon
