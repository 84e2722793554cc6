#include <doctest.h>

#include "random_poly.hpp"
#include "yang/errors.hpp"
#include "yang/parse.hpp"
#include "yang/poly.hpp"

using namespace yang;

namespace {
Poly t(unsigned k) { return Poly(Var::t(k)); }
Poly h() { return Poly(Var::hbar()); }
}  // namespace

TEST_CASE("printing follows the canonical order") {
  CHECK((t(1) + t(2) + h()).to_string() == "t1 + t2 + h");
  CHECK((h() + t(2) + t(1)).to_string() == "t1 + t2 + h");
  CHECK((t(1).pow(2) * t(2) - Poly(rational(1, 2)) * h() + Poly(3L)).to_string() == "t1^2*t2 - 1/2*h + 3");
  CHECK((Poly(0L) - t(1)).to_string() == "-t1");
  CHECK(Poly().to_string() == "0");
  CHECK(Poly(rational(-2, 3)).to_string() == "-2/3");
}

TEST_CASE("rational() canonicalizes") {
  CHECK(rational(2, 4) == rational(1, 2));
  CHECK(rational(3, -6) == rational(-1, 2));
  CHECK(to_string(rational(4, 2)) == "2");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    const Poly a = testing::random_poly(rng, 3), b = testing::random_poly(rng, 3), c = testing::random_poly(rng, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly());
    CHECK(a * Poly(1L) == a);
  }
}

TEST_CASE("exact division round-trips") {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    const Poly a = testing::random_poly(rng, 3, 4, 2);
    Poly b = testing::random_poly(rng, 3, 3, 2);
    if (b.is_zero()) b = Poly(1L);
    CHECK(exact_divide(a * b, b) == a);
    const auto qr = divide_with_remainder(a * b, b);
    CHECK(qr.remainder.is_zero());
    CHECK(qr.quotient == a);
  }
}

TEST_CASE("division errors") {
  CHECK_THROWS_AS(exact_divide(t(1), Poly()), DivisionByZero);
  try {
    exact_divide(t(1) * t(1) + Poly(1L), t(1));
    FAIL("expected NotDivisible");
  } catch (const NotDivisible& e) {
    CHECK(e.remainder() == "1");
  }
  CHECK(exact_divide(Poly(6L) * t(1), Poly(3L)) == Poly(2L) * t(1));
}

TEST_CASE("gcd") {
  const Poly a = t(1) - t(2), b = t(1) + h(), c = t(2) * t(2) + Poly(1L);
  CHECK(gcd(a * b, a * c) == make_monic(a));
  CHECK(gcd(Poly(2L) * a * b * b, Poly(3L) * b * c) == make_monic(b));
  CHECK(gcd(Poly(), Poly()).is_zero());
  CHECK(gcd(Poly(4L), Poly(6L)) == Poly(1L));
  CHECK(gcd(a, Poly()) == make_monic(a));
}

TEST_CASE("collect and substitute") {
  const Poly z(Var::z());
  const Poly p = z * z * t(1) + z * h() + Poly(5L);
  const auto parts = p.collect(Var::z());
  REQUIRE(parts.size() == 3);
  CHECK(parts.at(2) == t(1));
  CHECK(parts.at(0) == Poly(5L));
  CHECK(Poly::from_collected(Var::z(), parts) == p);
  CHECK(p.substitute(Var::z(), t(2)) == t(2) * t(2) * t(1) + t(2) * h() + Poly(5L));
  CHECK(p.degree_in(Var::z()) == 2);
  CHECK(p.total_degree() == 3);
}

TEST_CASE("parse") {
  CHECK(parse_poly("t1 + t2 + h") == t(1) + t(2) + h());
  CHECK(parse_poly("-(t1 - 1/2*h)^2") == Poly(0L) - (t(1) - Poly(rational(1, 2)) * h()).pow(2));
  CHECK(parse_poly("3/6") == Poly(rational(1, 2)));
  CHECK(parse_poly("z*q*c*a").total_degree() == 4);
  CHECK_THROWS_AS(parse_poly("t3", 2), UnknownVariable);
  CHECK_THROWS_AS(parse_poly("x1"), UnknownVariable);
  CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
  try {
    parse_poly("t1 + * t2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_poly("(t1"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("t1^-1"), ParseError);
}

TEST_CASE("parse/print round-trip on random polynomials") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const Poly p = testing::random_poly(rng, 4);
    CHECK(parse_poly(p.to_string(), 4) == p);
  }
}
