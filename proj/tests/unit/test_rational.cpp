#include <doctest.h>

#include "wildram/rational.hpp"

using namespace wildram;

TEST_CASE("construction canonicalizes") {
    CHECK(BigRational(6, 4) == BigRational(3, 2));
    CHECK(BigRational(1, -2) == BigRational(-1, 2));
    CHECK(BigRational(0, 7) == BigRational(0));
    CHECK(BigRational(3, 2).num() == 3);
    CHECK(BigRational(3, 2).den() == 2);
    CHECK_THROWS_AS(BigRational(1, 0), std::domain_error);
}

TEST_CASE("string round trips") {
    CHECK(BigRational::from_string("3/2") == BigRational(3, 2));
    CHECK(BigRational::from_string("-7") == BigRational(-7));
    CHECK(BigRational(3, 2).str() == "3/2");
    CHECK(BigRational(-5).str() == "-5");
    CHECK(BigRational(4, 2).str() == "2");
}

TEST_CASE("arithmetic") {
    CHECK(BigRational(1, 2) + BigRational(1, 3) == BigRational(5, 6));
    CHECK(BigRational(1, 2) - BigRational(1, 3) == BigRational(1, 6));
    CHECK(BigRational(2, 3) * BigRational(9, 4) == BigRational(3, 2));
    CHECK(BigRational(1, 2) / BigRational(3, 4) == BigRational(2, 3));
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
    CHECK(-BigRational(3, 2) == BigRational(-3, 2));
    CHECK(BigRational(-3, 2).abs() == BigRational(3, 2));
    CHECK(BigRational(-1, 2).is_negative());
    CHECK(BigRational(1, 3) < BigRational(1, 2));
    CHECK(BigRational(2, 4).is_zero() == false);
    CHECK(BigRational(0).is_zero());
    CHECK(BigRational(8, 4).is_integer());
    CHECK_FALSE(BigRational(8, 3).is_integer());
}

TEST_CASE("p-adic valuation") {
    Prime p5(5);
    CHECK(BigRational(51).valuation(Prime(3)) == 1); // 51 = 3 * 17
    CHECK(BigRational(3, 2).valuation(p5) == 0);
    CHECK(BigRational(50, 3).valuation(p5) == 2);
    CHECK(BigRational(3, 25).valuation(p5) == -2);
    CHECK_FALSE(BigRational(0).valuation(p5).has_value()); // +infinity
}

TEST_CASE("reduction into F_p") {
    CHECK(BigRational(3, 2).reduce_mod(Prime(5)).value() == 4);
    CHECK(BigRational(3, 2).reduce_mod(Prime(7)).value() == 5);
    CHECK(BigRational(3, 2).reduce_mod(Prime(13)).value() == 8);
    CHECK(BigRational(12294).reduce_mod(Prime(5)).value() == 4);
    CHECK(BigRational(0).reduce_mod(Prime(5)).is_zero());
    CHECK(BigRational(-1).reduce_mod(Prime(5)).value() == 4);
    CHECK_THROWS_AS(BigRational(3, 25).reduce_mod(Prime(5)), std::domain_error);
}

TEST_CASE("reduction is a ring homomorphism where defined") {
    Prime p(7);
    BigRational values[] = {BigRational(3, 2), BigRational(-5, 4), BigRational(11, 3),
                            BigRational(0),    BigRational(9, 5),  BigRational(-2)};
    for (const auto& a : values)
        for (const auto& b : values) {
            CHECK((a + b).reduce_mod(p) == a.reduce_mod(p) + b.reduce_mod(p));
            CHECK((a * b).reduce_mod(p) == a.reduce_mod(p) * b.reduce_mod(p));
        }
}
