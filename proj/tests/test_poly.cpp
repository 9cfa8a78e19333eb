#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsx/error.hpp"
#include "hsx/poly.hpp"

using namespace hsx;

TEST_CASE("ring operations and canonical form") {
  Poly x = Poly::monomial(2, 0, 1);
  Poly y = Poly::monomial(2, 1, 1);
  Poly p = (x + y) * (x - y);
  Poly q = x * x - y * y;
  CHECK(p == q);
  CHECK((p - q).is_zero());
  CHECK((p * Rat(0)).is_zero());

  Poly z = x * y - y * x;
  CHECK(z.is_zero());

  // coefficients cancel exactly
  Poly c = x * Rat(1, 3) + x * Rat(2, 3) - x;
  CHECK(c.is_zero());
}

TEST_CASE("laurent and half exponents") {
  // doubled exponents: sqrt(x) * sqrt(x) = x
  Poly sx = Poly::monomial(1, 0, 1);  // exponent unit 1/2
  Poly p = sx * sx;
  CHECK(p == Poly::monomial(1, 0, 2));
  CHECK(p.exponents_all_even());
  CHECK_FALSE(sx.exponents_all_even());

  // negative exponents multiply out
  Poly inv = Poly::monomial(1, 0, -2);
  CHECK((p * inv) == Poly::constant(1, 1));
}

TEST_CASE("evaluation") {
  Poly x = Poly::monomial(2, 0, 1);
  Poly y = Poly::monomial(2, 1, 1);
  Poly p = x * x + y * Rat(3);
  CHECK(p.evaluate({Rat(2), Rat(5)}) == Rat(19));
  Poly inv = Poly::monomial(2, 0, -1);
  CHECK(inv.evaluate({Rat(2), Rat(1)}) == Rat(1, 2));
  CHECK_THROWS_AS(inv.evaluate({Rat(0), Rat(1)}), Error);
}

TEST_CASE("rational functions compare by cross multiplication") {
  Poly x = Poly::monomial(1, 0, 1);
  RationalFn a(x * x - Poly::constant(1, 1), x - Poly::constant(1, 1));  // (x^2-1)/(x-1)
  RationalFn b = RationalFn::from_poly(x + Poly::constant(1, 1));        // x+1
  CHECK(a.equals(b));
  CHECK_FALSE(a.equals(RationalFn::from_poly(x)));
  RationalFn s = a - b;
  CHECK(s.is_zero());
}

TEST_CASE("printing") {
  Poly x = Poly::monomial(2, 0, 2);  // doubled exponents: this is x^1
  Poly p = x + Poly::constant(2, Rat(1, 2));
  CHECK(p.to_string({"x", "y"}, 2) == "1/2 + 1*x");
  CHECK(Poly(2).to_string({"x", "y"}, 2) == "0");
}
