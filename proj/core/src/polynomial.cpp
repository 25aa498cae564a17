#include "divcon/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "detail/linear_algebra.hpp"

namespace divcon {

std::string to_string(const Valuation& v) { return v ? std::to_string(*v) : "inf"; }

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw Error(ErrorCode::arity_mismatch, "too many variables in monomial");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t index, int exponent) {
  Monomial m;
  m.set(index, exponent);
  return m;
}

void Monomial::set(std::size_t i, int exponent) {
  if (i >= kMaxVariables) throw Error(ErrorCode::arity_mismatch, "variable index out of range");
  if (exponent < 0 || exponent > std::numeric_limits<std::uint8_t>::max()) {
    throw Error(ErrorCode::exponent_overflow, "exponent out of range: " + std::to_string(exponent));
  }
  degree_ = static_cast<std::uint16_t>(degree_ - exponents_[i] + exponent);
  exponents_[i] = static_cast<std::uint8_t>(exponent);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    int e = exponents_[i] + other.exponents_[i];
    if (e > std::numeric_limits<std::uint8_t>::max()) {
      throw Error(ErrorCode::exponent_overflow, "exponent overflow in product");
    }
    out.exponents_[i] = static_cast<std::uint8_t>(e);
  }
  out.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    out.exponents_[i] = static_cast<std::uint8_t>(exponents_[i] - divisor.exponents_[i]);
  }
  out.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return a.exponents_ <=> b.exponents_;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exponents_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

// -------------------------------------------------------------- Polynomial

namespace {

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<Polynomial::Term> drain(Accumulator& acc) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.emplace_back(m, std::move(c));
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return terms;
}

std::optional<int> min_jet(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

Polynomial::Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {
  if (variables_.size() > kMaxVariables) {
    throw Error(ErrorCode::arity_mismatch, "at most " + std::to_string(kMaxVariables) + " variables");
  }
}

Polynomial::Polynomial(std::vector<std::string> variables, std::vector<Term> terms,
                       std::optional<int> jet_order)
    : Polynomial(std::move(variables)) {
  terms_ = std::move(terms);
  jet_order_ = jet_order;
  normalize();
}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& c) {
  return Polynomial(std::move(variables), {{Monomial(), c}});
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::string_view name) {
  Polynomial p(std::move(variables));
  p.terms_.emplace_back(Monomial::variable(p.index_of(name)), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, const Monomial& m,
                                const Rational& c) {
  return Polynomial(std::move(variables), {{m, c}});
}

void Polynomial::normalize() {
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = variables_.size(); i < kMaxVariables; ++i) {
      if (m[i] != 0) throw Error(ErrorCode::arity_mismatch, "exponent beyond variable list");
    }
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    t.second.canonicalize();
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [&](const Term& t) {
    return t.second == 0 || (jet_order_ && t.first.degree() > *jet_order_);
  });
  terms_ = std::move(merged);
}

std::optional<std::size_t> Polynomial::find_variable(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Polynomial::index_of(std::string_view name) const {
  if (auto i = find_variable(name)) return *i;
  throw Error(ErrorCode::unknown_variable, "unknown variable '" + std::string(name) + "'");
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial()); }

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.back().first.degree(); }

Polynomial Polynomial::truncated(int N) const {
  Polynomial out(variables_);
  for (const auto& t : terms_) {
    if (t.first.degree() > N) break;
    out.terms_.push_back(t);
  }
  out.jet_order_ = min_jet(jet_order_, N);
  return out;
}

Polynomial Polynomial::without_jet_order() const {
  Polynomial out = *this;
  out.jet_order_.reset();
  return out;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial out(variables_);
  for (const auto& t : terms_) {
    if (t.first.degree() == d) out.terms_.push_back(t);
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  if (index >= variables_.size()) throw Error(ErrorCode::arity_mismatch, "derivative index");
  std::vector<Term> terms;
  for (const auto& [m, c] : terms_) {
    int e = m[index];
    if (e == 0) continue;
    Monomial d = m;
    d.set(index, e - 1);
    terms.emplace_back(d, c * e);
  }
  std::optional<int> jet;
  if (jet_order_) jet = std::max(0, *jet_order_ - 1);
  return Polynomial(variables_, std::move(terms), jet);
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(variables_, 1);
  result.jet_order_ = jet_order_;
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::with_unit_coefficients() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second = 1;
  return out;
}

Polynomial Polynomial::in_variables(const std::vector<std::string>& variables) const {
  std::vector<std::size_t> map(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), variables_[i]);
    map[i] = it == variables.end() ? kMaxVariables : static_cast<std::size_t>(it - variables.begin());
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial out;
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (m[i] == 0) continue;
      if (map[i] == kMaxVariables) {
        throw Error(ErrorCode::unknown_variable,
                    "variable '" + variables_[i] + "' is not available in the target ring");
      }
      out.set(map[i], m[i]);
    }
    terms.emplace_back(out, c);
  }
  return Polynomial(variables, std::move(terms), jet_order_);
}

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m,
                     const std::vector<std::string>& vars) {
  bool first = true;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << vars[i];
    if (m[i] > 1) os << '^' << m[i];
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Ascending degree; within a degree the x-heaviest monomial first.
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    if (a->first.degree() != b->first.degree()) return a->first.degree() < b->first.degree();
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    const Rational& c = t->second;
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (t->first.is_one()) {
      os << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) os << magnitude.get_str() << '*';
    append_monomial(os, t->first, variables_);
  }
  return os.str();
}

void Polynomial::require_same_variables(const Polynomial& other) const {
  if (variables_ != other.variables_) {
    throw Error(ErrorCode::arity_mismatch, "polynomials live over different variable lists");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_variables(other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() || (i < terms_.size() && terms_[i].first < other.terms_[j].first)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || other.terms_[j].first < terms_[i].first) {
      merged.push_back(other.terms_[j++]);
    } else {
      Rational c = terms_[i].second + other.terms_[j].second;
      if (c != 0) merged.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  jet_order_ = min_jet(jet_order_, other.jet_order_);
  if (jet_order_) *this = truncated(*jet_order_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  require_same_variables(other);
  auto jet = min_jet(jet_order_, other.jet_order_);
  *this = multiply_truncated(*this, other, jet ? *jet : std::numeric_limits<int>::max());
  jet_order_ = jet;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  Rational k = c;
  k.canonicalize();
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= k;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.variables_ == b.variables_ && a.terms_ == b.terms_;
}

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int N) {
  if (a.variables() != b.variables()) {
    throw Error(ErrorCode::arity_mismatch, "polynomials live over different variable lists");
  }
  Accumulator acc;
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.degree() > N) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.degree() + mb.degree() > N) break;
      acc[ma * mb] += ca * cb;
    }
  }
  return Polynomial(a.variables(), drain(acc));
}

// ------------------------------------------------------------ WeightVector

WeightVector::WeightVector(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) {
    throw Error(ErrorCode::arity_mismatch, "weight vector needs one weight per variable");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 1) {
      throw Error(ErrorCode::invalid_weight,
                  "weight of '" + names_[i] + "' must be a positive integer");
    }
  }
}

WeightVector WeightVector::uniform(const std::vector<std::string>& names, int weight) {
  return WeightVector(names, std::vector<int>(names.size(), weight));
}

bool WeightVector::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

int WeightVector::of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw Error(ErrorCode::missing_weight, "no weight given for variable '" + std::string(name) + "'");
  }
  return weights_[static_cast<std::size_t>(it - names_.begin())];
}

std::vector<int> WeightVector::for_variables(const std::vector<std::string>& variables) const {
  std::vector<int> out;
  out.reserve(variables.size());
  for (const auto& v : variables) out.push_back(of(v));
  return out;
}

int WeightVector::sum() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }

int WeightVector::max() const {
  return weights_.empty() ? 0 : *std::max_element(weights_.begin(), weights_.end());
}

std::string WeightVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights_[i]);
  }
  return out + ")";
}

// -------------------------------------------------------------- operations

int monomial_weight(const Monomial& m, std::span<const int> weights) {
  int total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) total += m[i] * weights[i];
  return total;
}

Valuation multiplicity(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  return f.terms().front().first.degree();
}

Valuation weight(const Polynomial& f, const WeightVector& w) {
  auto weights = w.for_variables(f.variables());
  Valuation best;
  for (const auto& [m, c] : f.terms()) {
    int v = monomial_weight(m, weights);
    if (!best || v < *best) best = v;
  }
  return best;
}

Polynomial quasihomogeneous_part(const Polynomial& f, const WeightVector& w, int d) {
  auto weights = w.for_variables(f.variables());
  std::vector<Polynomial::Term> terms;
  for (const auto& t : f.terms()) {
    if (monomial_weight(t.first, weights) == d) terms.push_back(t);
  }
  return Polynomial(f.variables(), std::move(terms));
}

RationalMatrix quadratic_form_matrix(const Polynomial& f) {
  const std::size_t n = f.arity();
  RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (const auto& [mono, c] : f.terms()) {
    if (mono.degree() < 2) continue;
    if (mono.degree() > 2) break;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      for (int e = 0; e < mono[i]; ++e) idx.push_back(i);
    }
    if (idx[0] == idx[1]) {
      m[idx[0]][idx[0]] = c;
    } else {
      m[idx[0]][idx[1]] = c / 2;
      m[idx[1]][idx[0]] = c / 2;
    }
  }
  return m;
}

std::size_t quadratic_rank(const Polynomial& f) {
  return detail::matrix_rank(quadratic_form_matrix(f));
}

std::vector<Polynomial> jacobian_generators(const Polynomial& f) {
  std::vector<Polynomial> out;
  out.reserve(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) out.push_back(f.derivative(i));
  return out;
}

Polynomial divide_by_variable_power(const Polynomial& f, std::size_t index, int k) {
  if (index >= f.arity()) throw Error(ErrorCode::arity_mismatch, "division variable index");
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    if (m[index] < k) {
      throw Error(ErrorCode::inexact_division,
                  "term is not divisible by " + f.variables()[index] + "^" + std::to_string(k));
    }
    Monomial q = m;
    q.set(index, m[index] - k);
    terms.emplace_back(q, c);
  }
  std::optional<int> jet;
  if (f.jet_order()) jet = std::max(0, *f.jet_order() - k);
  return Polynomial(f.variables(), std::move(terms), jet);
}

namespace {

Polynomial compose_impl(const Polynomial& f, std::span<const Polynomial> images, int N) {
  if (images.size() != f.arity()) {
    throw Error(ErrorCode::arity_mismatch, "substitution needs one image per variable");
  }
  std::vector<std::string> target = images.empty() ? std::vector<std::string>{}
                                                   : images[0].variables();
  for (const auto& img : images) {
    if (img.variables() != target) {
      throw Error(ErrorCode::arity_mismatch, "substitution images over different variable lists");
    }
  }
  const std::size_t n = f.arity();
  std::vector<int> max_exp(n, 0);
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], m[i]);
  }
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto v = multiplicity(images[i]);
    order[i] = v ? *v : std::numeric_limits<int>::max() / 4;
  }
  // powers[i][e] = images[i]^e truncated at N, built lazily.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) {
      cache.push_back(multiply_truncated(cache.back(), images[i], N));
    }
    return cache[static_cast<std::size_t>(e)];
  };

  // Prefix products keyed by the exponents of the first k variables.
  std::vector<std::map<Monomial, Polynomial>> prefix(n + 1);
  prefix[0].emplace(Monomial(), Polynomial::constant(target, 1));
  Accumulator acc;
  for (const auto& [m, c] : f.terms()) {
    long low = 0;
    for (std::size_t i = 0; i < n; ++i) low += static_cast<long>(m[i]) * order[i];
    if (low > N) continue;
    Monomial key;
    const Polynomial* current = &prefix[0].begin()->second;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      key.set(i, m[i]);
      auto [it, inserted] = prefix[i + 1].try_emplace(key, Polynomial());
      if (inserted) it->second = multiply_truncated(*current, power(i, m[i]), N);
      current = &it->second;
    }
    for (const auto& [tm, tc] : current->terms()) acc[tm] += c * tc;
  }
  return Polynomial(target, drain(acc));
}

}  // namespace

Polynomial compose_jet(const Polynomial& f, std::span<const Polynomial> images, int N) {
  Polynomial out = compose_impl(f, images, N);
  return out.truncated(N);
}

Polynomial compose_exact(const Polynomial& f, std::span<const Polynomial> images) {
  int bound = 0;
  for (const auto& img : images) bound = std::max(bound, img.degree());
  int N = std::max(0, f.degree()) * std::max(1, bound);
  return compose_impl(f, images, N);
}

}  // namespace divcon

namespace divcon {

namespace {

void enumerate_degree(std::size_t arity, std::size_t i, int remaining, Monomial& current,
                      std::vector<Monomial>& out) {
  if (i + 1 == arity) {
    current.set(i, remaining);
    out.push_back(current);
    current.set(i, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current.set(i, e);
    enumerate_degree(arity, i + 1, remaining - e, current, out);
  }
  current.set(i, 0);
}

void enumerate_weight(std::span<const int> weights, std::size_t i, int remaining,
                      Monomial& current, std::vector<Monomial>& out) {
  if (i == weights.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (int e = remaining / weights[i]; e >= 0; --e) {
    current.set(i, e);
    enumerate_weight(weights, i + 1, remaining - e * weights[i], current, out);
  }
  current.set(i, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t arity, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (arity == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial current;
  enumerate_degree(arity, 0, degree, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t arity, int degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= degree; ++d) {
    auto part = monomials_of_degree(arity, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Monomial> monomials_of_weight(std::span<const int> weights, int weight) {
  std::vector<Monomial> out;
  if (weight < 0) return out;
  Monomial current;
  enumerate_weight(weights, 0, weight, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace divcon
