#include <doctest.h>

#include "divcon/jet_substitution.hpp"
#include "divcon/polynomial.hpp"
#include "testing.hpp"

using namespace divcon;
using namespace divcon::testing;

TEST_CASE("multiplicity") {
  CHECK(multiplicity(P("x*y + z^3 + t^3")) == 2);
  CHECK_FALSE(multiplicity(Polynomial(kXYZT)).has_value());
  CHECK(multiplicity(P("x^2 + y^2 + z^3 + x*t^2")) == 2);
  CHECK(multiplicity(P("z^5 + t^7")) == 5);
}

TEST_CASE("weight") {
  CHECK(weight(P("x^2 + y^2 + z^3 + x*t^2"), W({4, 3, 2, 1})) == 6);
  CHECK_FALSE(weight(Polynomial(kXYZT), W({1, 1, 1, 1})).has_value());
  CHECK(weight(P("x*y + z^2 + t^3"), W({1, 5, 3, 2})) == 6);
  CHECK(to_string(Valuation{}) == "inf");
}

TEST_CASE("weight needs every variable") {
  const WeightVector w({"x", "y"}, {1, 1});
  try {
    (void)weight(P("x*y + z^2"), w);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::missing_weight);
  }
}

TEST_CASE("weight vectors reject non-positive entries") {
  CHECK_THROWS_AS(WeightVector({"x"}, {0}), Error);
  CHECK_THROWS_AS(WeightVector({"x", "y"}, {1}), Error);
}

TEST_CASE("quasihomogeneous parts") {
  const WeightVector w = W({3, 3, 3, 2});
  CHECK(quasihomogeneous_part(P("x*y + z^2 + t^3 + t^4"), w, 6) == P("x*y + z^2 + t^3"));
  CHECK(quasihomogeneous_part(P("x*y + z^2 + t^3 + t^4"), w, 5).is_zero());
  CHECK(quasihomogeneous_part(P("x^2 + y^2 + z^3 + x*t^2"), W({4, 3, 2, 1}), 8) == P("x^2"));
}

TEST_CASE("quasihomogeneous parts sum to f") {
  const Polynomial f = P("x^3*t + 2*y*z - 1/3*t^7 + x*y*z*t + z^2");
  const WeightVector w = W({2, 3, 1, 4});
  Polynomial sum(kXYZT);
  for (int d = 0; d <= 40; ++d) sum += quasihomogeneous_part(f, w, d);
  CHECK(sum == f);
}

TEST_CASE("quadratic rank") {
  CHECK(quadratic_rank(P("x*y + z^2 + t^3")) == 3);
  CHECK(quadratic_rank(P("x^2 + y^2 + z^3 + x*t^2")) == 2);
  CHECK(quadratic_rank(P("z^3 + t^4")) == 0);
  CHECK(quadratic_rank(P("(x + y)^2 + (x - y)^2")) == 2);
  CHECK(quadratic_rank(P("(x + y + z)^2")) == 1);
}

TEST_CASE("jacobian generators") {
  const auto g = jacobian_generators(P("z^2 + t^3", kZT));
  REQUIRE(g.size() == 2);
  CHECK(g[0] == P("2*z", kZT));
  CHECK(g[1] == P("3*t^2", kZT));
  const auto h = jacobian_generators(P("x*y + z^2 + t^3"));
  CHECK(h == std::vector<Polynomial>{P("y"), P("x"), P("2*z"), P("3*t^2")});
  for (const auto& d : jacobian_generators(P("5"))) CHECK(d.is_zero());
}

TEST_CASE("arithmetic") {
  const Polynomial a = P("x + y");
  const Polynomial b = P("x - y");
  CHECK(a * b == P("x^2 - y^2"));
  CHECK(a.pow(3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  CHECK((a - a).is_zero());
  CHECK(P("1/2*x + 1/2*x") == P("x"));
  CHECK(multiply_truncated(a.pow(2), a.pow(2), 3).is_zero());
  CHECK(P("x^2 + x^5").truncated(3) == P("x^2"));
  CHECK(P("x^2 + x^5").truncated(3).jet_order() == 3);
  CHECK(P("x") * Rational(3, 3) == P("x"));
  CHECK(P("6/4*x") == P("3/2*x"));
}

TEST_CASE("printing round-trips through the parser") {
  for (const char* s : {"x*y + z^2 + t^3", "-1/3*x^2 + 7*t", "x^2*y*z^3 - 2", "0"}) {
    const Polynomial p = P(s);
    CHECK(P(p.to_string()) == p);
  }
}

TEST_CASE("division by a variable power") {
  CHECK(divide_by_variable_power(P("x^3*y + x^2"), 0, 2) == P("x*y + 1"));
  try {
    (void)divide_by_variable_power(P("x^3 + y"), 0, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::inexact_division);
  }
}

TEST_CASE("substitute_jet") {
  const Polynomial f = P("x^2 + y^2 + 2*x*t^2 + z^3");
  CHECK(substitute_jet(f, map_of({{"x", "x - t^2"}}, 12), 12) == P("x^2 + y^2 + z^3 - t^4"));
  const Polynomial g = P("x^4 + y*z + t^9");
  const Polynomial id = substitute_jet(g, JetSubstitution::identity(kXYZT, 8), 8);
  CHECK(id == g.truncated(8));
  CHECK(id.jet_order() == 8);
  const Polynomial a2 = P("x*y + z^2 + t^3");
  CHECK(substitute_jet(a2, map_of({{"z", "z + x"}, {"y", "y - 2*z - x"}}, 10), 10) == a2);
}

TEST_CASE("substitute_jet rejects constant terms and wrong arity") {
  try {
    (void)substitute_jet(P("x*y"), map_of({{"x", "x + 1"}}, 4), 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::nonzero_constant_term);
  }
  try {
    (void)substitute_jet(P("x*y"), map_of({}, 4, kXYZ), 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::arity_mismatch);
  }
}
