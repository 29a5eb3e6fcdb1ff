#include "ncqm/errors.hpp"
#include "ncqm/rational.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace ncqm;

TEST_SUITE("rational") {

TEST_CASE("parse accepts integers and fractions") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("0") == Rational(0));
}

TEST_CASE("parse normalizes to lowest terms") {
  CHECK(parse_rational("-5/10") == Rational(-1, 2));
  CHECK(to_string(parse_rational("-5/10")) == "-1/2");
  CHECK(parse_rational("4/2") == Rational(2));
  CHECK(to_string(parse_rational("4/2")) == "2");
}

TEST_CASE("parse rejects malformed input") {
  for (const char* bad : {"1/0", "", "/", "1/", "/2", "1/2/3", "a", "1.5", "1/-2",
                          "- 1", "2 /3", "0x10"}) {
    INFO("input: ", bad);
    CHECK_THROWS_AS(parse_rational(bad), DomainError);
    try {
      parse_rational(bad);
    } catch (const DomainError& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }
}

TEST_CASE("to_string keeps the sign on the numerator") {
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_string(Rational(3)) == "3");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(Rational(5, 1)) == "5");
}

TEST_CASE("round trip through text is exact") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational value = testing::random_rational(rng, 100, 50);
    CHECK(parse_rational(to_string(value)) == value);
  }
}

TEST_CASE("arithmetic stays canonical") {
  const Rational half(1, 2);
  const Rational third(1, 3);
  CHECK(to_string(half + third) == "5/6");
  CHECK(to_string(half * third) == "1/6");
  CHECK(to_string(half - half) == "0");
  CHECK(half / third == Rational(3, 2));
}

}  // TEST_SUITE
