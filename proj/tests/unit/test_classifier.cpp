#include <doctest.h>

#include "divcon/classifier.hpp"
#include "divcon/weight_maps.hpp"
#include "testing.hpp"

using namespace divcon;
using namespace divcon::testing;

namespace {

SingularityTag tag(SingularityType t, int k = 0) { return SingularityTag{t, k}; }

}  // namespace

TEST_CASE("classify_simple on the table germs") {
  const SingularityReport a2 = classify_simple(P("x*y + z^2 + t^3"));
  CHECK(a2.type == tag(SingularityType::A, 2));
  CHECK(a2.milnor_number == 2);
  CHECK(a2.corank <= 1);

  const SingularityReport e6 = classify_simple(P("x^2 + y^2 + z^3 + x*t^2"));
  CHECK(e6.type == tag(SingularityType::E6));
  CHECK(e6.milnor_number == 6);

  const SingularityReport d4 = classify_simple(P("x*y + z^3 + t^3"));
  CHECK(d4.type == tag(SingularityType::D, 4));
  CHECK(d4.milnor_number == 4);
  CHECK(d4.corank == 2);
}

TEST_CASE("classify_simple on standard forms") {
  const std::vector<std::pair<std::string, SingularityTag>> corpus{
      {"x^2 + y^2 + z^2 + t^2", tag(SingularityType::A, 1)},
      {"x^5 + y^2 + z^2 + t^2", tag(SingularityType::A, 4)},
      {"x^7 + y^2 + z^2 + t^2", tag(SingularityType::A, 6)},
      {"x^2*y + y^4 + z^2 + t^2", tag(SingularityType::D, 5)},
      {"x^2*y + y^5 + z^2 + t^2", tag(SingularityType::D, 6)},
      {"x^3 + y^4 + z^2 + t^2", tag(SingularityType::E6)},
      {"x^3 + x*y^3 + z^2 + t^2", tag(SingularityType::E7)},
      {"x^3 + y^5 + z^2 + t^2", tag(SingularityType::E8)},
      {"x*y + z^3 + t^6", tag(SingularityType::non_simple)},
      {"x^3 + y^3 + z^3 + t^2", tag(SingularityType::non_simple)},
  };
  for (const auto& [text, expected] : corpus) {
    CAPTURE(text);
    const SingularityReport r = classify_simple(P(text));
    CHECK(r.type == expected);
    if (expected.type == SingularityType::A || expected.type == SingularityType::D) {
      CHECK(r.milnor_number == expected.index);
    }
  }
}

TEST_CASE("classify_simple is invariant under coordinate changes") {
  // (x + z)^3 + (y - t^2)^4 + ... is still E6 after the shear and swap.
  const Polynomial f = P("(x + z)^3 + (y + t^2)^4 + (z - y)^2 + t^2");
  CHECK(classify_simple(f).type == tag(SingularityType::E6));
  const Polynomial g = P("x*y + (z + t)^2 + t^5 + x^3");
  CHECK(classify_simple(g).type == tag(SingularityType::A, 4));
}

TEST_CASE("simple witnesses map onto the normal form") {
  for (const char* s : {"x*y + z^2 + t^3 + z*t^2", "x*y + z^3 + t^3 + x^2*z", "x^2 + y^2 + z^3 + x*t^2"}) {
    CAPTURE(s);
    const Polynomial f = P(s);
    const SingularityReport r = classify_simple(f);
    REQUIRE(r.witness);
    REQUIRE(r.normal_form);
    const int N = r.normal_form->jet_order;
    CHECK(substitute_jet(f, *r.witness, N) == r.normal_form->polynomial.truncated(N));
  }
}

TEST_CASE("cA_index") {
  const SingularityReport d4 = cA_index(P("x*y + z^3 + t^3"));
  CHECK(d4.cA_index == 2);
  REQUIRE(d4.residual);
  CHECK(*d4.residual == P("z^3 + t^3", kZT));

  CHECK(cA_index(P("x*y + z*t")).cA_index == 1);
  CHECK(cA_index(P("x^2 + y^2 + z^3 + x*t^2")).cA_index == 2);
  CHECK(cA_index(P("x*y + z^4 + t^8")).cA_index == 3);
}

TEST_CASE("cA residual multiplicity is n + 1") {
  for (const char* s : {"x*y + z^5 + t^5", "x^2 + y^2 + z^3 + x*t^2", "x*y + z^2 + t^3"}) {
    const SingularityReport r = cA_index(P(s));
    REQUIRE(r.cA_index);
    REQUIRE(r.residual);
    CHECK(multiplicity(*r.residual) == *r.cA_index + 1);
  }
}

TEST_CASE("germs of quadratic rank below two are not cA") {
  const SingularityReport r = cA_index(P("x^3 + y^3 + z^3 + t^2"));
  CHECK(r.type == tag(SingularityType::unrecognized));
  CHECK_FALSE(r.cA_index.has_value());
}

TEST_CASE("classifier errors") {
  try {
    (void)classify_simple(P("x*y + z^2"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_isolated);
  }
  try {
    (void)classify_simple(P("1 + x^2 + y^2"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_hypersurface_germ);
  }
}

TEST_CASE("is_simple") {
  CHECK(is_simple(P("x*y + z^3 + t^3")));
  CHECK_FALSE(is_simple(P("x*y + z^3 + t^6")));
  CHECK(is_simple(P("x^2 + y^2 + z^2 + t^2")));
}

TEST_CASE("classify") {
  CHECK(classify(P("x + y^2")).type == tag(SingularityType::smooth));
  const SingularityReport r = classify(P("x^2 + y^2 + z^3 + x*t^2"));
  CHECK(r.type == tag(SingularityType::E6));
  CHECK(r.cA_index == 2);
  CHECK(SingularityTag{SingularityType::cA, 3}.to_string() == "cA3");
  CHECK(SingularityTag{SingularityType::D, 5}.to_string() == "D5");
}
