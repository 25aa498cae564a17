#include <doctest.h>

#include "divcon/local_algebra.hpp"
#include "divcon/normal_form.hpp"
#include "testing.hpp"
#include "witness.hpp"

using namespace divcon;
using namespace divcon::testing;

TEST_CASE("split_quadratic removes y*t^2") {
  const Polynomial f = P("x*y + y*t^2 + z^3 + t^6");
  const MarkedNormalForm nf = split_quadratic(f, W({1, 5, 2, 1}), {"x", "y"});
  CHECK(nf.polynomial == P("x*y + z^3 + t^6"));
  CHECK(nf.witness.component("x") == P("x - t^2"));
  CHECK(nf.witness.component("y") == P("y"));
  check_witness(f, nf);
}

TEST_CASE("split_quadratic leaves a split germ alone") {
  const Polynomial f = P("x*y + z^3 + t^5");
  const MarkedNormalForm nf = split_quadratic(f, W({1, 1, 1, 1}), {"x", "y"});
  CHECK(nf.polynomial == f);
  CHECK(nf.witness.is_identity());
}

TEST_CASE("split_quadratic removes x^2*z") {
  const Polynomial f = P("x*y + x^2*z + z^2 + t^5");
  const MarkedNormalForm nf = split_quadratic(f, W({1, 1, 1, 1}), {"x", "y"});
  CHECK(nf.polynomial == P("x*y + z^2 + t^5"));
  CHECK(nf.witness.component("y") == P("y - x*z"));
  check_witness(f, nf);
  CHECK(only_split_monomial(nf.polynomial, 0, 1));
}

TEST_CASE("split_quadratic preconditions") {
  try {
    (void)split_quadratic(P("x^2 + z^2 + t^3"), W({1, 1, 1, 1}), {"x", "y"});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::precondition_violated);
  }
  try {
    (void)split_quadratic(P("x*y + z^2 + t^3"), W({3, 3, 1, 1}), {"x", "y"});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::precondition_violated);
  }
}

TEST_CASE("weighted_normal_form") {
  const Polynomial f = P("x*y + z^2 + t^3 + t^4");
  const MarkedNormalForm nf = weighted_normal_form(f, W({3, 3, 3, 2}));
  CHECK(nf.polynomial == P("x*y + z^2 + t^3"));
  check_witness(f, nf);

  const Polynomial q = P("x*y + z^3 + t^6");
  const MarkedNormalForm same = weighted_normal_form(q, W({3, 3, 2, 1}));
  CHECK(same.polynomial == q);
  CHECK(same.witness.is_identity());

  const Polynomial g = P("x^2 + y^2 + z^3 - t^4 + z*t^3");
  const MarkedNormalForm e6 = weighted_normal_form(g, W({6, 6, 4, 3}));
  CHECK(e6.polynomial == P("x^2 + y^2 + z^3 - t^4"));
  check_witness(g, e6);
}

TEST_CASE("weighted_normal_form is idempotent and keeps mu") {
  const Polynomial f = P("x*y + z^3 + t^6 + z^2*t^3 + x*t^5");
  const WeightVector w = W({3, 3, 2, 1});
  const MarkedNormalForm once = weighted_normal_form(f, w);
  check_witness(f, once);
  const MarkedNormalForm twice = weighted_normal_form(once.polynomial, w);
  CHECK(twice.polynomial == once.polynomial);
  CHECK(twice.witness.is_identity());
  CHECK(milnor_data(once.polynomial).milnor_number == milnor_data(f).milnor_number);
}

TEST_CASE("weighted_normal_form rejects non-isolated germs") {
  try {
    (void)weighted_normal_form(P("x*y + z^2"), W({1, 1, 1, 1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_isolated);
  }
}

TEST_CASE("reduce_to_simple") {
  const Polynomial f = P("x*y + z^2 + t^3 + z*t^5");
  const MarkedNormalForm nf = reduce_to_simple(f, W({3, 3, 3, 2}));
  CHECK(nf.polynomial == P("x*y + z^2 + t^3"));
  check_witness(f, nf);

  const Polynomial d4 = P("x*y + z^3 + t^3");
  const MarkedNormalForm same = reduce_to_simple(d4, W({3, 3, 2, 2}));
  CHECK(same.polynomial == d4);
  CHECK(same.witness.is_identity());
}

TEST_CASE("reduce_to_simple on the sheared E6 germ") {
  const Polynomial f = P("x^2 + y^2 + 2*x*t^2 + z^3");
  const MarkedNormalForm nf = reduce_to_simple(f, W({4, 3, 2, 1}));
  check_witness(f, nf);
  CHECK(milnor_data(nf.polynomial).milnor_number == 6);
  CHECK(weight(nf.polynomial, W({4, 3, 2, 1})) == 6);
  // alpha*x^2 + beta*y^2 + gamma*z^3 + delta*x*t^2 with nonzero marks.
  CHECK(nf.polynomial.size() == 4);
  for (const char* m : {"x^2", "y^2", "z^3", "x*t^2"}) {
    CHECK(nf.polynomial.coefficient(P(m).terms().front().first) != 0);
  }
}

TEST_CASE("reduce_to_simple rejects non-simple leading parts") {
  try {
    (void)reduce_to_simple(P("x*y + z^3 + t^6"), W({3, 3, 2, 1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_simple_leading_part);
  }
}
