#include "doctest.h"
#include "mtc/integer.hpp"

using namespace mtc;

TEST_CASE("exact quotient") {
  CHECK(exact_quotient(Integer(42), Integer(-6)) == -7);
  CHECK(exact_quotient(Integer(0), Integer(5)) == 0);
  try {
    exact_quotient(Integer(43), Integer(6));
    FAIL("expected NonIntegral");
  } catch (const NonIntegral& e) {
    CHECK(e.remainder() == 1);
    CHECK(e.divisor() == 6);
  }
  CHECK_THROWS_AS(exact_quotient(Integer(3), Integer(0)), NonIntegral);
  CHECK_THROWS_AS(exact_quotient(Integer(0), Integer(0)), std::domain_error);
}

TEST_CASE("divides, mod, gcd") {
  CHECK(divides(Integer(3), Integer(-12)));
  CHECK_FALSE(divides(Integer(5), Integer(12)));
  CHECK(divides(Integer(0), Integer(0)));
  CHECK_FALSE(divides(Integer(0), Integer(1)));
  CHECK(mod(Integer(-7), Integer(5)) == 3);
  CHECK(mod(Integer(7), Integer(5)) == 2);
  CHECK_THROWS(mod(Integer(1), Integer(0)));
  CHECK(gcd(Integer(-12), Integer(18)) == 6);
  CHECK(gcd(Integer(0), Integer(0)) == 0);
}

TEST_CASE("powers and signs") {
  CHECK(pow(Integer(3), 4) == 81);
  CHECK(pow(-2L, 5) == -32);
  CHECK(pow(7L, 0) == 1);
  CHECK(sign_power(0) == 1);
  CHECK(sign_power(3) == -1);
}

TEST_CASE("rationals are canonical") {
  const Rational r = make_rational(Integer(6), Integer(-4));
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(make_rational(Integer(8), Integer(4))) == "2");
  CHECK(is_integral(make_rational(Integer(8), Integer(4))));
  CHECK_FALSE(is_integral(r));
  CHECK_THROWS(make_rational(Integer(1), Integer(0)));
}

TEST_CASE("perfect squares") {
  Integer root;
  CHECK(perfect_square_root(Integer(144), root));
  CHECK(root == 12);
  CHECK(perfect_square_root(Integer(0), root));
  CHECK(root == 0);
  CHECK_FALSE(perfect_square_root(Integer(2), root));
  CHECK_FALSE(perfect_square_root(Integer(-4), root));
}

TEST_CASE("big values print exactly") {
  CHECK(to_string(Integer(pow(Integer(10), 30) + 1)) == "1000000000000000000000000000001");
}
