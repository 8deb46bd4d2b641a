#include "catch_amalgamated.hpp"
#include "ytab/rational.hpp"

#include <random>

using namespace ytab;

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(rat(1, 2), 0) == rat(1));
    CHECK(pochhammer(rat(1, 2), 2) == rat(3, 4));
    CHECK(pochhammer(rat(-1), 3) == rat(0));
    CHECK(pochhammer(rat(3), 4) == rat(3 * 4 * 5 * 6));
    // half-integers are first-class
    CHECK(pochhammer(rat(-3, 2), 2) == rat(3, 4));
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(51, 25) == Int("247959266474052"));
}

TEST_CASE("rationals are canonical") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-2, -4) == rat(1, 2));
    CHECK(rat(2, -4) == rat(-1, 2));
    CHECK(rat(2, -4).get_den() == 2);
    CHECK_THROWS_AS(rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(to_int(rat(1, 2)), std::domain_error);
    CHECK(to_int(rat(8, 4)) == 2);
}

TEST_CASE("pow_rat handles negative exponents") {
    CHECK(pow_rat(rat(2, 3), 3) == rat(8, 27));
    CHECK(pow_rat(rat(2, 3), -2) == rat(9, 4));
    CHECK(pow_rat(rat(5), 0) == rat(1));
}
