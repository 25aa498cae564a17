#include "detail/series.hpp"

namespace divcon::detail {

namespace {

// Sum of coefficients[k] * h^k modulo degree > N, h without constant term.
Polynomial sum_powers(const Polynomial& h, const std::vector<Rational>& coefficients, int N) {
  Polynomial result = Polynomial::constant(h.variables(), coefficients[0]);
  Polynomial power = Polynomial::constant(h.variables(), 1);
  for (std::size_t k = 1; k < coefficients.size(); ++k) {
    power = multiply_truncated(power, h, N);
    if (power.is_zero()) break;
    result += power * coefficients[k];
  }
  return result.truncated(N).without_jet_order();
}

}  // namespace

Polynomial series_reciprocal(const Polynomial& u, int N) {
  Rational c = u.constant_term();
  if (c == 0) throw Error(ErrorCode::precondition_violated, "reciprocal of a non-unit");
  Polynomial h = u.without_jet_order() * (1 / c) - Polynomial::constant(u.variables(), 1);
  std::vector<Rational> coeffs(static_cast<std::size_t>(N) + 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = (k % 2 == 0) ? 1 : -1;
  return sum_powers(h, coeffs, N) * (1 / c);
}

Polynomial series_sqrt(const Polynomial& u, int N) {
  if (u.constant_term() != 1) {
    throw Error(ErrorCode::precondition_violated, "square root needs constant term 1");
  }
  Polynomial h = u.without_jet_order() - Polynomial::constant(u.variables(), 1);
  std::vector<Rational> coeffs(static_cast<std::size_t>(N) + 1);
  Rational binom = 1;
  const Rational half(1, 2);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k] = binom;
    binom = binom * (half - static_cast<long>(k)) / static_cast<long>(k + 1);
  }
  return sum_powers(h, coeffs, N);
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational out(rn, rd);
  out.canonicalize();
  return out;
}

}  // namespace divcon::detail
