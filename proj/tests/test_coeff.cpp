#include <catch2/catch_amalgamated.hpp>

#include "bhall/coeff.hpp"

using namespace bhall;

TEST_CASE("field arithmetic in Q(sqrt q)", "[coeff]") {
    const int q = 2;
    Coefficient v = v_power(1, q);
    CHECK(v == Coefficient{Rational(0), Rational(1)});
    CHECK(coeff_mul(v, v, q) == Coefficient{Rational(q)});
    CHECK(v_power(2, q) == Coefficient{Rational(q)});
    CHECK(v_power(0, q) == Coefficient::one());
    CHECK(v_power(-2, q) == Coefficient{Rational(1, q)});
    // v^{-1} = v / q
    CHECK(v_power(-1, q) == Coefficient{Rational(0), Rational(1, q)});
    CHECK(coeff_mul(v_power(-1, q), v, q) == Coefficient::one());
}

TEST_CASE("inverses and the multiplicative norm", "[coeff]") {
    const int q = 3;
    Coefficient c{Rational(2), Rational(-5)};
    Coefficient i = coeff_inv(c, q);
    CHECK(coeff_mul(c, i, q) == Coefficient::one());
    CHECK(coeff_div(c, c, q) == Coefficient::one());
    CHECK_THROWS_AS(coeff_inv(Coefficient::zero(), q), internal_error);
    // (1 + v)(1 - v) = 1 - q
    Coefficient a{Rational(1), Rational(1)}, b{Rational(1), Rational(-1)};
    CHECK(coeff_mul(a, b, q) == Coefficient{Rational(1 - q)});
}

TEST_CASE("additive structure and printing", "[coeff]") {
    Coefficient a{Rational(1, 2), Rational(3)};
    Coefficient b{Rational(1, 2), Rational(-3)};
    CHECK((a + b) == Coefficient{Rational(1)});
    CHECK((a - a).is_zero());
    CHECK((-a) == Coefficient{Rational(-1, 2), Rational(-3)});
    CHECK(Coefficient{Rational(2), Rational(1)}.str() == "2+1*v");
    CHECK(Coefficient::zero().str() == "0");
}
